#pragma once

#include <vector>

#include "pado/levels.hpp"
#include "pado/mpoly.hpp"
#include "pado/pbw.hpp"

namespace pado {

// Coordinate ring of 2x2 matrices: vars a, b, c, d at indices 0..3.
inline constexpr int kVarA = 0;
inline constexpr int kVarB = 1;
inline constexpr int kVarC = 2;
inline constexpr int kVarD = 3;

// Image of a coordinate variable under the derivation attached to a
// generator (differentiating the right translation at the identity):
//   e:  b -> a, d -> c      h1: a -> a, c -> c
//   h2: b -> b, d -> d      f:  a -> b, c -> d
// and every other variable maps to 0.
MPoly gen_derivation_image(GlGen g, int var);

// Extension of the rule above to a derivation of the coordinate ring.
MPoly apply_gen(GlGen g, const MPoly& f);

// E_m acting through the derivations: apply f^{m3}/m3! first, then the
// binomial factors in h2 and h1, then e^{m0}/m0!.
MPoly apply_dist(const Mono& m, const MPoly& f);

Rat eval_at_identity(const MPoly& f);

// <E_m, g> = (E_m . g)(identity).
Rat pair_direct(const Mono& m, const MPoly& g);

// Monomial dual to E_m: b^{m0} (a-1)^{m1} (d-1)^{m2} c^{m3}.
MPoly dual_monomial(const Mono& m);

// One off-delta entry of the pairing matrix.
struct PairingDeviation {
    Mono nu;
    Mono mu;
    Rat value;
};

// Structure report for the pairing matrix.  The matrix is not the
// identity: off-delta entries exist, but only where |nu| > |mu|, and
// every entry is an integer.  `kronecker` is true iff there are no
// deviations at all; `kronecker_when_dominated` is true iff entry(nu, mu)
// equals delta_{nu,mu} whenever |nu| <= |mu| (the part that does hold).
struct PairingReport {
    bool kronecker = true;
    bool kronecker_when_dominated = true;
    bool all_integer = true;
    std::size_t pairs_checked = 0;
    std::vector<PairingDeviation> deviations;
};

// Pairing matrix over all weights <= max_weight on both sides, computed
// with sparse matrices over the basis of shifted monomials
// (a-1)^i b^j c^k (d-1)^l of total degree <= max_weight.  Entry (nu, mu)
// is <E_nu, dual_monomial(mu)>.
class PairingTable {
public:
    explicit PairingTable(unsigned max_weight);

    const std::vector<Mono>& index() const { return index_; }
    Rat entry(const Mono& nu, const Mono& mu) const;

    // True iff the table is the identity matrix.
    bool is_identity() const;

    // Full structure scan; deviations are listed in index order.
    PairingReport report() const;

    // Pairing of p^{n|nu|} E_nu against p^{-n|mu|} m_mu.
    Rat scaled_entry(const Mono& nu, const Mono& mu, const LevelParams& lp) const;

private:
    unsigned max_weight_;
    std::vector<Mono> index_;
    std::map<Mono, int> pos_;
    std::vector<std::vector<Rat>> rows_;  // rows_[nu index][mu index]
};

}  // namespace pado
