#include "pado/model_sections.hpp"

#include "pado/factorials.hpp"
#include "pado/ideal.hpp"

namespace pado {

namespace {

/*
 * Per-order disc conditions on one chart. Near-chart centers run over all
 * residues mod p^n; far-chart centers only over the multiples of p, the
 * y-coordinates of the residual discs at infinity.
 */
bool side_ok(const DiffOp& a, const LevelParams& lp, bool far_chart) {
    for (const auto& [order, f] : a.terms()) {
        Poly g = f * (Rat(factorial(static_cast<unsigned long>(order))) /
                      Rat(qfactorial(static_cast<unsigned long>(order), lp)));
        IdealSpec spec{lp.p, static_cast<unsigned>(lp.n), order};
        if (far_chart) {
            Int top = lp.pn();
            for (Int c(0); c < top; ++c)
                if (!ideal_criterion_at(g, Int(lp.p) * c, spec)) return false;
        } else {
            if (!ideal_membership(g, spec)) return false;
        }
    }
    return true;
}

}  // namespace

bool is_model_section_level_m(const DiffOp& a, const LevelParams& lp) {
    if (a.is_zero()) return true;
    if (!is_global_section_level_m(a, lp)) return false;
    if (lp.n == 0) return true;
    if (!side_ok(a, lp, false)) return false;
    return side_ok(chart_swap(a), lp, true);
}

}  // namespace pado
