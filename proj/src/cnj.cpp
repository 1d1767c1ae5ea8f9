#include "pado/cnj.hpp"

#include "pado/factorials.hpp"
#include "pado/stirling.hpp"

namespace pado {

Rat cnj_coefficient(unsigned long nu, unsigned long j, const LevelParams& lp) {
    Rat r = make_rat(stirling_first(nu, j) * factorial(j), factorial(nu));
    return r * pow_rat(Rat(lp.p), static_cast<long>(lp.n) * (static_cast<long>(nu) - static_cast<long>(j)));
}

bool cnj_identity_holds(unsigned long nu, const LevelParams& lp) {
    // lhs: p^{n nu} (T choose nu) = p^{n nu} T(T-1)...(T-nu+1)/nu!
    Poly lhs(Rat(1));
    for (unsigned long i = 0; i < nu; ++i) lhs = lhs * (Poly::variable() - Poly(Rat(static_cast<long>(i))));
    lhs = lhs * (pow_rat(Rat(lp.p), static_cast<long>(lp.n) * static_cast<long>(nu)) / Rat(factorial(nu)));

    Poly rhs;
    Rat pn = pow_rat(Rat(lp.p), lp.n);
    for (unsigned long j = 0; j <= nu; ++j) {
        // (p^n T)^j / j!
        Rat w = cnj_coefficient(nu, j, lp) * pow_rat(pn, static_cast<long>(j)) / Rat(factorial(j));
        rhs = rhs + Poly::monomial(static_cast<int>(j), w);
    }
    return lhs == rhs;
}

bool cnj_integral(unsigned long nu, const LevelParams& lp) {
    for (unsigned long j = 0; j <= nu; ++j) {
        if (!p_integral(cnj_coefficient(nu, j, lp), lp.p)) return false;
    }
    return true;
}

}  // namespace pado
