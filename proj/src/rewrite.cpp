#include "pado/rewrite.hpp"

#include <stdexcept>

namespace pado {

namespace {

GradedSymbol generator_symbol(long p, unsigned n, int d, int k, const Int& a) {
    Poly shift = Poly::variable() - Poly(Rat(a));
    Rat scale(pow_int(Int(p), static_cast<unsigned long>(n) * (d - k)));
    return GradedSymbol(d, shift.pow(static_cast<unsigned long>(k)) * scale);
}

}  // namespace

RewriteCertificate rewrite_d_certificate(long p, unsigned n, unsigned nu, int d, int k,
                                         const Int& a) {
    if (k < 0 || k > d) throw std::invalid_argument("need 0 <= k <= d");
    if (nu < 1 || nu > n) throw std::invalid_argument("need 1 <= nu <= n");

    RewriteCertificate cert;
    cert.z_exp = static_cast<long>(n - nu + 1) * (d - k);
    cert.x_extra = static_cast<long>(n - nu) * (d - k);
    cert.x_log = d;

    cert.exponents_ok = cert.z_exp >= 0 && cert.x_extra >= 0 &&
                        cert.x_extra + d - cert.z_exp == k &&
                        cert.z_exp + static_cast<long>(nu - 1) * (d - k) ==
                            static_cast<long>(n) * (d - k);

    /* recombine z^A x^B x^d through zx = p and compare with the chart pullback */
    long combined = cert.x_extra + d - cert.z_exp;
    if (combined < 0) {
        cert.recombines = false;
        return cert;
    }
    ChartTransform t{false, a, nu - 1};
    GradedSymbol pulled = to_chart(generator_symbol(p, n, d, k, a), t, p);
    Rat pa(pow_int(Int(p), static_cast<unsigned long>(cert.z_exp)));
    GradedSymbol recombined(d, Poly::monomial(static_cast<int>(combined), Rat(1)) * pa);
    cert.recombines = (pulled == recombined);
    return cert;
}

bool rewrite_disc_check(long p, unsigned n, int d, int k, const Int& a) {
    if (k < 0 || k > d) throw std::invalid_argument("need 0 <= k <= d");
    ChartTransform t{false, a, n};
    GradedSymbol pulled = to_chart(generator_symbol(p, n, d, k, a), t, p);
    return pulled == GradedSymbol(d, Poly::monomial(k, Rat(1)));
}

}  // namespace pado
