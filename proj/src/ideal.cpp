#include "pado/ideal.hpp"

#include <stdexcept>

#include "pado/factorials.hpp"

namespace pado {

namespace {

void require_integral(const Poly& f, long p) {
    if (min_vp(f, Int(p)) < 0)
        throw std::invalid_argument("ideal membership needs p-integral coefficients");
}

/* coefficient vector padded to the given width */
ZRow int_row(const Poly& f, int cols) {
    ZRow row(cols, Int(0));
    for (auto& [k, c] : f.coeffs()) {
        if (k >= cols) throw std::invalid_argument("polynomial degree exceeds row width");
        if (c.get_den() != 1) throw std::invalid_argument("expected integer coefficients");
        row[k] = c.get_num();
    }
    return row;
}

Int denominator_lcm(const Poly& f) {
    Int l = 1;
    for (auto& [k, c] : f.coeffs()) {
        (void)k;
        l = lcm(l, c.get_den());
    }
    return l;
}

}  // namespace

bool ideal_criterion_at(const Poly& f, const Int& a, const IdealSpec& spec) {
    require_integral(f, spec.p);
    Poly shifted = taylor_shift(f, Rat(a));
    for (int k = 0; k < spec.d; ++k) {
        long need = static_cast<long>(spec.n) * (spec.d - k);
        if (vp(shifted.coeff(k), spec.p) < need) return false;
    }
    return true;
}

bool ideal_membership(const Poly& f, const IdealSpec& spec) {
    Int pn = pow_int(Int(spec.p), spec.n);
    for (Int a = 0; a < pn; ++a)
        if (!ideal_criterion_at(f, a, spec)) return false;
    return true;
}

ZMat ideal_lattice_at(const Int& a, const IdealSpec& spec, int cols) {
    if (cols < spec.d + 1) throw std::invalid_argument("lattice width below ideal degree");
    ZMat gens(cols);
    Poly shift = Poly::variable() - Poly(Rat(a));
    Poly power(Rat(1));
    for (int i = 0; i <= spec.d; ++i) {
        Rat scale(pow_int(Int(spec.p), static_cast<unsigned long>(spec.n) * (spec.d - i)));
        for (int j = 0; i + j < cols; ++j)
            gens.rows.push_back(int_row(Poly::monomial(j, scale) * power, cols));
        power *= shift;
    }
    return hnf(gens);
}

bool ideal_oracle_at(const Poly& f, const Int& a, const IdealSpec& spec) {
    require_integral(f, spec.p);
    Poly scaled = f * Rat(denominator_lcm(f));
    int cols = std::max(scaled.degree(), spec.d) + 1;
    return lattice_member(ideal_lattice_at(a, spec, cols), int_row(scaled, cols));
}

bool ideal_membership_oracle(const Poly& f, const IdealSpec& spec) {
    Int pn = pow_int(Int(spec.p), spec.n);
    for (Int a = 0; a < pn; ++a)
        if (!ideal_oracle_at(f, a, spec)) return false;
    return true;
}

}  // namespace pado
