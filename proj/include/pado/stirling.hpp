#pragma once

#include "pado/rational.hpp"

namespace pado {

/*
 * Signed Stirling numbers of the first kind:
 *   T(T-1)...(T-nu+1) = sum_j s(nu, j) T^j.
 * Zero for j > nu; s(0,0) = 1.
 */
Int stirling_first(unsigned long nu, unsigned long j);

/* Stirling numbers of the second kind; T^nu = sum_j S2(nu,j) T(T-1)...(T-j+1). */
Int stirling_second(unsigned long nu, unsigned long j);

}  // namespace pado
