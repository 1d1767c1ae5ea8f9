#pragma once

#include <optional>
#include <vector>

#include "pado/levels.hpp"
#include "pado/pbw.hpp"
#include "pado/rational.hpp"
#include "pado/torsion.hpp"

namespace pado {

/* floor(n(p-1)/(p+1)) */
long n_prime(long p, int n);

/*
 * The 2d+1 exponent vectors (i,j,0,0), i+j = d, and (0,j,0,l), j+l = d with
 * l >= 1, listed by increasing symbol x-exponent 0..2d. Their symbols form
 * a permuted diagonal against the x^k D^d coordinates, so the graded map
 * restricted to them has full column rank; the family size matches the rank
 * of the degree-d section lattice, which pins the graded source dimension
 * after the central character is divided out.
 */
std::vector<Mono> reduced_family(int d);

struct Theorem1Degree {
    int d = 0;
    bool injective = false;       // reduced family: distinct x-exponents, nonzero symbols
    bool realizes = false;        // closed symbol form re-derived through realize_element
    long max_exponent = 0;        // max over k of the fiber minimum t(d,k)
    bool exponents_agree = false; // p-local elimination route equals the fiber route
    bool cosurjective = false;    // t(d,k) <= N for every k <= 2d
};

struct Theorem1Report {
    int max_degree = 0;
    long torsion_exponent = 0;  // N from torsion_bound
    bool ok = false;
    std::vector<Theorem1Degree> degrees;
};

/*
 * Graded shadow of the isomorphism theorem on the projective line:
 * injectivity through the reduced family and p^N-cosurjectivity of the
 * degree-d image lattice, for every d <= max_degree.
 */
Theorem1Report theorem1_graded_check(const LevelParams& lp, int max_degree);

struct CalcCheck {
    unsigned long nu = 0;
    Int center;
    bool exact = false;            // the recentering expansion as an operator identity
    bool ratios_integral = false;  // q_nu!/(q_k! q_{nu-k}!) for k = 0..nu
};

/*
 * Expansion of (q_nu!/nu!) p^{n nu} x^nu D^nu around a center a:
 *   sum_k [q_nu!/(q_k! q_{nu-k}!)] p^{nk} a^{nu-k}
 *         (q_k!/k!)(x-a)^k D^k o (q_{nu-k}!/(nu-k)!)(p^n D)^{nu-k},
 * rebuilt term by term with exact composition.
 */
CalcCheck calc_identity_check(unsigned long nu, const Int& center, const LevelParams& lp);

struct Theorem2Degree {
    int d = 0;
    long c = 0;               // ceil(d(p-1)/(p+1))
    bool chain_ok = false;    // n c(d) >= n d (p-1)/(p+1) >= d n'
    bool lattice_ok = false;  // model lattice rows: vp(entry) + N >= d n' + t(d,col)
};

struct Theorem2Report {
    int max_degree = 0;
    long nprime = 0;
    long torsion_exponent = 0;
    unsigned long generators_checked = 0;
    std::optional<Mono> first_bad_generator;
    bool left_ok = false;    // p^{n|nu|} B_nu realizes to a model section, |nu| <= D
    bool calc_ok = false;    // recentering identities at every finite chart center
    bool ratios_ok = false;  // the q-binomial ratios they use are integers
    bool right_ok = false;   // chain inequality and lattice containment per degree
    bool ok = false;
    std::vector<CalcCheck> calc;
    std::vector<Theorem2Degree> degrees;
};

/*
 * Both inclusions of the blow-up model theorem in degrees <= max_degree:
 * the scaled enveloping algebra maps into model sections (left), and the
 * model section lattice sits inside p^{d n'} times the graded image up to
 * the p^N torsion allowance (right). At n = 0 the right side degenerates
 * to the cosurjectivity statement of theorem1_graded_check.
 */
Theorem2Report theorem2_check(const LevelParams& lp, int max_degree);

}  // namespace pado
