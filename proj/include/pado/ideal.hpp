#pragma once

#include "pado/lattice.hpp"
#include "pado/poly.hpp"

namespace pado {

/*
 * Congruence ideal of level n in degree d: around each integer center a the
 * local stalk is (x - a, p^n)^d. Membership of a polynomial means membership
 * at every center mod p^n.
 */
struct IdealSpec {
    long p = 2;
    unsigned n = 0;
    int d = 0;
};

/*
 * Taylor-coefficient criterion at one center: vp of the k-th coefficient of
 * f(a + u) is at least n(d - k) for 0 <= k < d. Requires p-integral input.
 */
bool ideal_criterion_at(const Poly& f, const Int& a, const IdealSpec& spec);

/* criterion at every center a = 0..p^n-1 */
bool ideal_membership(const Poly& f, const IdealSpec& spec);

/*
 * Independent route for the same stalk: exact integer-lattice membership in
 * the row span of { x^j p^(n(d-i)) (x-a)^i }. The span contains p^(nd) Z[x],
 * so its saturation index is a p-power and integer HNF membership agrees
 * with the p-local criterion. Requires p-integral input.
 */
bool ideal_oracle_at(const Poly& f, const Int& a, const IdealSpec& spec);

bool ideal_membership_oracle(const Poly& f, const IdealSpec& spec);

/* row lattice of the local stalk truncated to degree < cols, in HNF */
ZMat ideal_lattice_at(const Int& a, const IdealSpec& spec, int cols);

}  // namespace pado
