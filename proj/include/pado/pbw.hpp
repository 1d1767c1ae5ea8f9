#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>

#include "pado/levels.hpp"
#include "pado/rational.hpp"

namespace pado {

// Exponent vector of an ordered monomial e^{m0} h1^{m1} h2^{m2} f^{m3}.
using Mono = std::array<unsigned, 4>;

inline unsigned mono_weight(const Mono& m) { return m[0] + m[1] + m[2] + m[3]; }

enum class GlGen { E, H1, H2, F };

// Element of the enveloping algebra of gl2, stored on the ordered
// monomial basis.  Products are straightened with the relations
//   [h1,e]=e  [h2,e]=-e  [h1,f]=-f  [h2,f]=f  [e,f]=h1-h2  [h1,h2]=0.
class GlElement {
public:
    GlElement() = default;
    explicit GlElement(const Rat& constant);
    static GlElement one() { return GlElement(Rat(1)); }
    static GlElement generator(GlGen g);
    static GlElement monomial(const Mono& m, const Rat& coeff = Rat(1));

    bool is_zero() const { return c_.empty(); }
    Rat coeff(const Mono& m) const;
    void add_coeff(const Mono& m, const Rat& v);
    const std::map<Mono, Rat>& terms() const { return c_; }

    GlElement operator+(const GlElement& o) const;
    GlElement operator-(const GlElement& o) const;
    GlElement operator*(const GlElement& o) const;
    GlElement operator*(const Rat& s) const;
    GlElement operator-() const;
    bool operator==(const GlElement& o) const { return c_ == o.c_; }
    bool operator!=(const GlElement& o) const { return !(*this == o); }

private:
    std::map<Mono, Rat> c_;
};

GlElement bracket(const GlElement& a, const GlElement& b);

// Left multiplication by a generator on an ordered monomial, fully
// straightened.  Memoized.
GlElement gen_left_mul(GlGen g, const Mono& m);

// Divided-power binomial basis element
//   E_m = e^{m0}/m0! (h1 choose m1) (h2 choose m2) f^{m3}/m3!
// expanded on the ordered monomial basis.
GlElement dist_basis_element(const Mono& m);

// q-scaled basis element B_m = q_{m0}! q_{m1}! q_{m2}! q_{m3}! E_m,
// where q_k = floor(k / p^m).
GlElement level_basis_element(const Mono& m, const LevelParams& lp);

// p^{n(m0+m1+m2+m3)} B_m.
GlElement scaled_level_basis_element(const Mono& m, const LevelParams& lp);

// Coordinates on the E basis / the B basis / the p^{n|.|} B basis.
std::map<Mono, Rat> to_dist_coords(const GlElement& x);
std::map<Mono, Rat> to_level_coords(const GlElement& x, const LevelParams& lp);
std::map<Mono, Rat> to_scaled_level_coords(const GlElement& x, const LevelParams& lp);

// Product of two E-basis elements, expressed on the E basis.  Computed
// natively with divided-power straightening rules; suitable for large
// grids where expanding on the ordered monomial basis is too slow.
std::map<Mono, Rat> dist_product(const Mono& a, const Mono& b);

// vp of the q-factorial scale u_m = prod_i q_{m_i}!.
long vp_level_scale(const Mono& m, const LevelParams& lp);

struct ClosureCounterexample {
    Mono left, right, target;
    Rat coefficient;  // coordinate of B_target in B_left * B_right
    long valuation;
};

struct ClosureReport {
    bool ok = true;
    long pairs_checked = 0;
    std::optional<ClosureCounterexample> bad;
};

// Checks that products of the p^{n|.|} B basis elements of weight
// <= max_weight have p-integral coordinates on the same basis.
ClosureReport check_subalgebra_closure(const LevelParams& lp, unsigned max_weight);

}  // namespace pado
