#include "pado/generation.hpp"

#include <stdexcept>

#include "pado/factorials.hpp"

namespace pado {

GenerationStep graded_generation(int d, int k, const LevelParams& lp) {
    if (d < 0 || k < 0 || k > 2 * d) throw std::invalid_argument("need 0 <= k <= 2d");

    GenerationStep g;
    g.d = d;
    g.k = k;

    unsigned long pm = lp.pm().get_ui();
    unsigned long du = static_cast<unsigned long>(d);
    unsigned long ku = static_cast<unsigned long>(k);
    g.q = du / pm;
    g.s = du % pm;
    g.qp = ku / pm;
    g.r = ku % pm;

    DpCoeff dp = dp_coeff(du, lp);
    Rat target_scale = dp.value;  // q_d!/d!

    if (du < 2 * pm) {
        g.trivial = true;
        g.residual_d = d;
        g.residual_k = k;
        g.residual_scale = target_scale;
        g.unit = Rat(1);
    } else if (k <= d) {
        g.unit = dp.unit;
        g.count_xd = static_cast<long>(g.qp);
        if (g.r <= 2 * g.s) {
            g.count_d = static_cast<long>(g.q - g.qp);
            g.residual_d = static_cast<int>(g.s);
            g.residual_k = static_cast<int>(g.r);
            g.residual_scale = Rat(1) / Rat(factorial(g.s));
        } else {
            g.count_d = static_cast<long>(g.q - g.qp) - 1;
            g.residual_d = static_cast<int>(pm + g.s);
            g.residual_k = static_cast<int>(g.r);
            g.residual_scale = Rat(1) / (Rat(factorial(g.s)) * Rat(factorial(pm)));
        }
    } else {
        g.unit = dp.unit;
        unsigned long qpp = g.qp / 2;
        g.count_x2d = static_cast<long>(qpp);
        if (g.qp % 2 == 0) {
            if (g.r <= 2 * g.s) {
                g.count_d = static_cast<long>(g.q - qpp);
                g.residual_d = static_cast<int>(g.s);
                g.residual_k = static_cast<int>(g.r);
                g.residual_scale = Rat(1) / Rat(factorial(g.s));
            } else {
                g.count_d = static_cast<long>(g.q - qpp) - 1;
                g.residual_d = static_cast<int>(pm + g.s);
                g.residual_k = static_cast<int>(g.r);
                g.residual_scale = Rat(1) / (Rat(factorial(g.s)) * Rat(factorial(pm)));
            }
        } else {
            if (pm + g.r <= 2 * g.s) {
                g.count_d = static_cast<long>(g.q - qpp);
                g.residual_d = static_cast<int>(g.s);
                g.residual_k = static_cast<int>(pm + g.r);
                g.residual_scale = Rat(1) / Rat(factorial(g.s));
            } else {
                g.count_d = static_cast<long>(g.q - qpp) - 1;
                g.residual_d = static_cast<int>(pm + g.s);
                g.residual_k = static_cast<int>(pm + g.r);
                g.residual_scale = Rat(1) / (Rat(factorial(g.s)) * Rat(factorial(pm)));
            }
        }
    }

    if (g.count_xd < 0 || g.count_d < 0 || g.count_x2d < 0)
        throw std::logic_error("negative block count in graded generation");

    g.unit_is_p_unit = (vp(g.unit, lp.p) == Valuation::of(0));
    g.residual_small = g.residual_d < static_cast<int>(2 * pm) && g.residual_k >= 0 &&
                       g.residual_k <= 2 * g.residual_d;

    /* exact recombination at the symbol level */
    int pmi = static_cast<int>(pm);
    Rat inv_pmfac = Rat(1) / Rat(factorial(pm));
    GradedSymbol acc(0, Poly(Rat(1)));
    GradedSymbol block_xd(pmi, Poly::monomial(pmi, inv_pmfac));
    GradedSymbol block_d(pmi, Poly(inv_pmfac));
    GradedSymbol block_x2d(pmi, Poly::monomial(2 * pmi, inv_pmfac));
    for (long i = 0; i < g.count_xd; ++i) acc = acc * block_xd;
    for (long i = 0; i < g.count_d; ++i) acc = acc * block_d;
    for (long i = 0; i < g.count_x2d; ++i) acc = acc * block_x2d;
    acc = acc * GradedSymbol(g.residual_d, Poly::monomial(g.residual_k, g.residual_scale));
    acc = acc * g.unit;
    GradedSymbol target(d, Poly::monomial(k, target_scale));
    g.recombines = (acc == target);

    return g;
}

}  // namespace pado
