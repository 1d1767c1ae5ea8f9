#pragma once

#include "pado/levels.hpp"
#include "pado/poly.hpp"

namespace pado {

// c_{nu,j} = s(nu,j) j! p^{n(nu-j)} / nu!  with s the signed Stirling
// numbers of the first kind.  These satisfy
//   p^{n nu} (T choose nu) = sum_j c_{nu,j} (p^n T)^j / j!
// and are p-integral whenever n >= 1.
Rat cnj_coefficient(unsigned long nu, unsigned long j, const LevelParams& lp);

// Both sides of the displayed identity as exact polynomials in T.
bool cnj_identity_holds(unsigned long nu, const LevelParams& lp);

// vp(c_{nu,j}) >= 0 for all 0 <= j <= nu.
bool cnj_integral(unsigned long nu, const LevelParams& lp);

}  // namespace pado
