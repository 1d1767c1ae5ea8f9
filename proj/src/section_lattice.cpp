#include "pado/section_lattice.hpp"

#include <stdexcept>

#include "pado/factorials.hpp"

namespace pado {

namespace {

ZMat stalk_lattice(long p, unsigned n, int d, const Int& a) {
    ZMat m(2 * d + 1);
    Poly shift = Poly::variable() - Poly(Rat(a));
    Poly power(Rat(1));
    for (int k = 0; k <= 2 * d; ++k) {
        Rat scale(1);
        if (k < d) scale = Rat(pow_int(Int(p), static_cast<unsigned long>(n) * (d - k)));
        m.rows.push_back(symbol_row(power * scale, d));
        power *= shift;
    }
    return m;
}

/* image of the lattice under the involution g_j = (-1)^d f_(2d-j) */
ZMat reversal_image(const ZMat& m, int d) {
    ZMat out(m.cols);
    for (auto& r : m.rows) {
        ZRow rev(m.cols, Int(0));
        for (int j = 0; j < m.cols; ++j) rev[j] = (d % 2 == 0) ? r[2 * d - j] : -r[2 * d - j];
        out.rows.push_back(rev);
    }
    return out;
}

}  // namespace

ZRow symbol_row(const Poly& f, int d) {
    int cols = 2 * d + 1;
    ZRow row(cols, Int(0));
    for (auto& [k, c] : f.coeffs()) {
        if (k >= cols) throw std::invalid_argument("coefficient degree exceeds 2d");
        if (c.get_den() != 1) throw std::invalid_argument("expected integer coefficients");
        row[k] = c.get_num();
    }
    return row;
}

Poly row_poly(const ZRow& r) {
    Poly f;
    for (std::size_t k = 0; k < r.size(); ++k) f.set_coeff(static_cast<int>(k), Rat(r[k]));
    return f;
}

SectionLattice global_section_lattice(long p, unsigned n, int d) {
    require_prime(Int(p));
    if (d < 0) throw std::invalid_argument("negative degree");
    SectionLattice l;
    l.p = p;
    l.n = n;
    l.d = d;
    l.basis = identity_mat(2 * d + 1);
    Int pn = pow_int(Int(p), n);
    for (Int a = 0; a < pn; ++a) {
        ZMat stalk = stalk_lattice(p, n, d, a);
        l.basis = lattice_intersect(l.basis, stalk);
        l.basis = lattice_intersect(l.basis, reversal_image(stalk, d));
    }
    return l;
}

Rat level_scale(int d, const LevelParams& lp) {
    unsigned long du = static_cast<unsigned long>(d);
    return Rat(qfactorial(du, lp)) / Rat(factorial(du));
}

bool lattice_contains_symbol(const SectionLattice& l, const Poly& f) {
    Int den = 1;
    for (auto& [k, c] : f.coeffs()) {
        (void)k;
        den = lcm(den, c.get_den());
    }
    if (den % Int(l.p) == 0)
        throw std::invalid_argument("coefficients must be p-integral");
    return lattice_member(l.basis, symbol_row(f * Rat(den), l.d));
}

long optimal_exponent(const SectionLattice& l) {
    Valuation best = Valuation::inf();
    for (auto& r : l.basis.rows)
        for (auto& e : r)
            if (e != 0) best = min(best, vp(e, l.p));
    if (best.infinite) throw std::invalid_argument("empty lattice has no exponent");
    return best.value;
}

SandwichReport sandwich_check(const SectionLattice& l) {
    SandwichReport rep;
    long d = l.d;
    long num = d * (l.p - 1);
    rep.c = (num + l.p) / (l.p + 1);
    rep.exponent = optimal_exponent(l);
    ZMat id = identity_mat(2 * l.d + 1);
    rep.lower_ok = lattice_subset(
        lattice_scale(id, pow_int(Int(l.p), static_cast<unsigned long>(l.n) * d)), l.basis);
    rep.upper_ok = lattice_subset(
        l.basis, lattice_scale(id, pow_int(Int(l.p), static_cast<unsigned long>(l.n) * rep.c)));
    return rep;
}

}  // namespace pado
