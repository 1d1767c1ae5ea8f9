#pragma once

#include <vector>

#include "pado/pbw.hpp"
#include "pado/realize.hpp"

namespace pado {

/*
 * Coordinates of the realized level basis on the graded generators
 * u_{d,k} = (q_d!/d!) x^k D^d: the symbol of B_nu is c_nu u_{d,kappa(nu)}
 * with d = |nu| and kappa = nu1+nu2+2 nu3. symbol_exponent is the least
 * vp(c_nu) over the fiber, the p-power needed to reach u_{d,k} from the
 * degree-d graded image; symbol_argmin returns the first minimizing nu.
 */
long symbol_exponent(int d, int k, const LevelParams& lp);
Mono symbol_argmin(int d, int k, const LevelParams& lp);

/* c_nu exactly, and its valuation computed Legendre-style without big ints */
Rat coordinate_value(const Mono& nu, const LevelParams& lp);
long coordinate_valuation(const Mono& nu, const LevelParams& lp);

/*
 * Graded preimage certificate for one generator:
 *   scalar * symbol(B_argmin) = p^exponent * (q_d!/d!) x^k D^d
 * with vp(scalar) = 0; exact marks the identity rechecked through
 * realize_element instead of the closed symbol form.
 */
struct TorsionWitness {
    int d = 0;
    int k = 0;
    long exponent = 0;
    Mono argmin{0, 0, 0, 0};
    Rat scalar;
    bool exact = false;
};

struct TorsionReport {
    long bound = 0;         // N: max exponent over the generators with d < 2p^m
    long range_bound = 0;   // same max over every d <= max_degree
    long apriori = 0;       // vp((p^m-1)! p^m!) * 2p^m, one factor per degree drop
    bool within_apriori = false;
    bool all_exact = false;     // every witness rechecked through realize_element
    bool covers_range = false;  // p^bound u_{d,k} reached for every d <= max_degree
    std::vector<TorsionWitness> witnesses;  // the generators with d < 2p^m
};

/*
 * Least p-powers reaching the graded generators u_{d,k} from the image of
 * the level-m algebra, degree by degree at the symbol level. N is decided
 * by the generators of degree < 2p^m; every higher degree factors through
 * them via graded_generation, and the report certifies that p^N u_{d,k}
 * recombines exactly, for each d <= max_degree and k <= 2d, from the three
 * block symbols, a small-degree witness, and a p-integral scalar.
 */
TorsionReport torsion_bound(const LevelParams& lp, int max_degree);

/* scalar * B_argmin, the certified element behind a witness */
GlElement witness_preimage(const TorsionWitness& w, const LevelParams& lp);

}  // namespace pado
