#include "pado/xi.hpp"

#include "pado/factorials.hpp"

namespace pado {

GradedSymbol level_symbol(const Mono& nu, const LevelParams& lp) {
    Rat c(1);
    for (unsigned i = 0; i < 4; ++i) c *= Rat(qfactorial(nu[i], lp)) / Rat(factorial(nu[i]));
    if ((nu[1] + nu[3]) % 2 == 1) c = -c;
    return GradedSymbol(static_cast<int>(mono_weight(nu)), Poly::monomial(symbol_x_exponent(nu), c));
}

std::vector<Mono> monos_of_weight(unsigned w) {
    std::vector<Mono> out;
    for (unsigned a = 0; a <= w; ++a)
        for (unsigned b = 0; a + b <= w; ++b)
            for (unsigned c = 0; a + b + c <= w; ++c)
                out.push_back(Mono{a, b, c, w - a - b - c});
    return out;
}

XiIntegralityReport xi_level_m_integrality(unsigned max_weight, const LevelParams& lp) {
    XiIntegralityReport rep;
    for (unsigned w = 0; w <= max_weight; ++w) {
        for (const Mono& nu : monos_of_weight(w)) {
            DiffOp a = realize_element(level_basis_element(nu, lp));
            ++rep.checked;
            if (!is_global_section_level_m(a, lp)) {
                rep.ok = false;
                if (!rep.first_bad) rep.first_bad = nu;
            }
        }
    }
    return rep;
}

}  // namespace pado
