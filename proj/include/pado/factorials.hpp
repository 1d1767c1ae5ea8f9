#pragma once

#include "pado/levels.hpp"
#include "pado/rational.hpp"

namespace pado {

/* k!, cached. */
Int factorial(unsigned long k);

/* floor(nu/p^m)!, the level-m replacement for nu!. */
Int qfactorial(unsigned long nu, const LevelParams& lp);

/* vp(k!) by Legendre's formula; no big integers involved. */
long vp_factorial(unsigned long k, long p);
long vp_qfactorial(unsigned long nu, const LevelParams& lp);

Int binomial(unsigned long n, unsigned long k);

/*
 * Divided-power coefficient floor(d/p^m)!/d! together with its certified
 * decomposition: write d = p^m q + s, 0 <= s < p^m; then
 *   floor(d/p^m)!/d! = u / (s! (p^m!)^q)  with vp(u) = 0.
 */
struct DpCoeff {
    Rat value;
    unsigned long q = 0;
    unsigned long s = 0;
    Rat unit;
};

DpCoeff dp_coeff(unsigned long d, const LevelParams& lp);

/* binom(i+j, i) * q_i! * q_j! / q_{i+j}!, p-integral on the whole grid. */
Rat integrality_ratio(unsigned long i, unsigned long j, const LevelParams& lp);

/* q_nu! / (q_k! q_{nu-k}!), an integer for all 0 <= k <= nu. */
Rat qbinomial_ratio(unsigned long nu, unsigned long k, const LevelParams& lp);

}  // namespace pado
