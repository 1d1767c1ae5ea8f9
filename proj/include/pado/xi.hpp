#pragma once

#include <optional>

#include "pado/pbw.hpp"
#include "pado/realize.hpp"
#include "pado/symbol.hpp"

namespace pado {

/*
 * Closed form of the top symbol of the realized level basis element B_nu:
 * sign * prod_i (q_{nu_i}!/nu_i!) * x^(nu1+nu2+2 nu3) D^(|nu|) with the sign
 * (-1)^(nu1+nu3). Tests compare this against symbol_of(realize_element(..)).
 */
GradedSymbol level_symbol(const Mono& nu, const LevelParams& lp);

/* x-exponent of the realized symbol */
inline int symbol_x_exponent(const Mono& nu) {
    return static_cast<int>(nu[1] + nu[2] + 2 * nu[3]);
}

struct XiIntegralityReport {
    bool ok = true;
    unsigned long checked = 0;
    std::optional<Mono> first_bad;
};

/*
 * Every realized B_nu of weight <= max_weight is a divided-power integral
 * operator on both charts of the projective line.
 */
XiIntegralityReport xi_level_m_integrality(unsigned max_weight, const LevelParams& lp);

/* all exponent vectors of the given total weight, lexicographic */
std::vector<Mono> monos_of_weight(unsigned w);

}  // namespace pado
