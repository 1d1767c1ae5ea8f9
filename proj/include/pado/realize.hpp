#pragma once

#include "pado/diff_op.hpp"
#include "pado/pbw.hpp"

namespace pado {

// Realization of the enveloping algebra by differential operators on
// the affine x-chart:
//   e -> Dx,  h1 -> -x Dx,  h2 -> x Dx,  f -> -x^2 Dx.
DiffOp realize_generator(GlGen g);

// Multiplicative extension along ordered monomials, memoized.
DiffOp realize_element(const GlElement& x);

// ef + fe + (h1 - h2)^2 / 2.  Central, and realized by zero.
GlElement casimir();

// Brackets of the element against all four generators vanish.
bool is_central(const GlElement& x);

}  // namespace pado
