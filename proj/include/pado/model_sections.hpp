#pragma once

#include "pado/diff_op.hpp"
#include "pado/levels.hpp"

namespace pado {

/*
 * Integrality of an operator over the n-th blow-up model at level m:
 * global level-m integrality on the projective line plus, order by order,
 * the congruence-ideal conditions at the residual disc centers of both
 * charts. The far-chart conditions are taken on the whole-operator chart
 * swap; a single order of a global operator need not swap to a polynomial
 * on its own. At n = 0 this is exactly the projective-line predicate.
 */
bool is_model_section_level_m(const DiffOp& a, const LevelParams& lp);

}  // namespace pado
