#include "pado/torsion.hpp"

#include <stdexcept>

#include "pado/factorials.hpp"
#include "pado/generation.hpp"
#include "pado/symbol.hpp"
#include "pado/xi.hpp"

namespace pado {

namespace {

/* visit the fiber {|nu| = d, kappa(nu) = k} in a fixed order */
template <typename F>
void for_fiber(int d, int k, F&& fn) {
    for (int nf = 0; 2 * nf <= k; ++nf) {
        int h = k - 2 * nf;  // nu1 + nu2
        int ne = d - nf - h;
        if (ne < 0) continue;
        for (int n1 = 0; n1 <= h; ++n1)
            fn(Mono{static_cast<unsigned>(ne), static_cast<unsigned>(n1),
                    static_cast<unsigned>(h - n1), static_cast<unsigned>(nf)});
    }
}

void check_fiber_args(int d, int k) {
    if (d < 0 || k < 0 || k > 2 * d) throw std::invalid_argument("need 0 <= k <= 2d");
}

}  // namespace

Rat coordinate_value(const Mono& nu, const LevelParams& lp) {
    unsigned long d = mono_weight(nu);
    Rat c = Rat(factorial(d)) / Rat(qfactorial(d, lp));
    for (unsigned i = 0; i < 4; ++i) c *= Rat(qfactorial(nu[i], lp)) / Rat(factorial(nu[i]));
    if ((nu[1] + nu[3]) % 2 == 1) c = -c;
    return c;
}

long coordinate_valuation(const Mono& nu, const LevelParams& lp) {
    unsigned long d = mono_weight(nu);
    long v = vp_factorial(d, lp.p) - vp_qfactorial(d, lp);
    for (unsigned i = 0; i < 4; ++i) v += vp_qfactorial(nu[i], lp) - vp_factorial(nu[i], lp.p);
    return v;
}

long symbol_exponent(int d, int k, const LevelParams& lp) {
    check_fiber_args(d, k);
    bool seen = false;
    long best = 0;
    for_fiber(d, k, [&](const Mono& nu) {
        long v = coordinate_valuation(nu, lp);
        if (!seen || v < best) best = v, seen = true;
    });
    if (!seen) throw std::logic_error("empty symbol fiber");
    return best;
}

Mono symbol_argmin(int d, int k, const LevelParams& lp) {
    check_fiber_args(d, k);
    bool seen = false;
    long best = 0;
    Mono arg{0, 0, 0, 0};
    for_fiber(d, k, [&](const Mono& nu) {
        long v = coordinate_valuation(nu, lp);
        if (!seen || v < best) best = v, arg = nu, seen = true;
    });
    if (!seen) throw std::logic_error("empty symbol fiber");
    return arg;
}

GlElement witness_preimage(const TorsionWitness& w, const LevelParams& lp) {
    return level_basis_element(w.argmin, lp) * w.scalar;
}

namespace {

TorsionWitness make_witness(int d, int k, const LevelParams& lp) {
    TorsionWitness w;
    w.d = d;
    w.k = k;
    w.argmin = symbol_argmin(d, k, lp);
    long t = coordinate_valuation(w.argmin, lp);
    if (t < 0) throw std::logic_error("symbol coordinate with negative valuation");
    w.exponent = t;
    w.scalar = pow_rat(Rat(lp.p), t) / coordinate_value(w.argmin, lp);
    if (!(vp(w.scalar, lp.p) == Valuation::of(0)))
        throw std::logic_error("witness scalar is not a p-unit");

    DiffOp op = realize_element(witness_preimage(w, lp));
    Rat target = pow_rat(Rat(lp.p), t) * dp_coeff(static_cast<unsigned long>(d), lp).value;
    w.exact = !op.is_zero() && op.order() == d &&
              symbol_of(op) == GradedSymbol(d, Poly::monomial(k, target));
    return w;
}

}  // namespace

TorsionReport torsion_bound(const LevelParams& lp, int max_degree) {
    if (max_degree < 1) throw std::invalid_argument("degree bound must be >= 1");

    TorsionReport rep;
    long pm = lp.pm().get_si();
    rep.apriori =
        (vp_factorial(static_cast<unsigned long>(pm) - 1, lp.p) +
         vp_factorial(static_cast<unsigned long>(pm), lp.p)) *
        2 * pm;

    rep.all_exact = true;
    int small_top = static_cast<int>(2 * pm) - 1;
    for (int d = 0; d <= small_top; ++d)
        for (int k = 0; k <= 2 * d; ++k) {
            TorsionWitness w = make_witness(d, k, lp);
            rep.all_exact = rep.all_exact && w.exact;
            if (w.exponent > rep.bound) rep.bound = w.exponent;
            rep.witnesses.push_back(w);
        }
    rep.within_apriori = rep.bound <= rep.apriori;

    /*
     * Coverage: p^N u_{d,k} = mu * symbol(blocks * B_argmin(residual)) with
     * vp(mu) >= 0, the blocks taken from the generation step. The witness
     * table keyed below holds the small-degree certificates just built.
     */
    auto small = [&](int d, int k) -> const TorsionWitness& {
        for (const TorsionWitness& w : rep.witnesses)
            if (w.d == d && w.k == k) return w;
        throw std::logic_error("residual generator out of range");
    };

    rep.covers_range = true;
    Mono b_xd{0, static_cast<unsigned>(pm), 0, 0};
    Mono b_d{static_cast<unsigned>(pm), 0, 0, 0};
    Mono b_x2d{0, 0, 0, static_cast<unsigned>(pm)};
    for (int d = 0; d <= max_degree; ++d)
        for (int k = 0; k <= 2 * d; ++k) {
            long t = symbol_exponent(d, k, lp);
            if (t > rep.range_bound) rep.range_bound = t;

            GenerationStep g = graded_generation(d, k, lp);
            if (!g.certified()) {
                rep.covers_range = false;
                continue;
            }
            const TorsionWitness& w = small(g.residual_d, g.residual_k);
            GradedSymbol s = level_symbol(w.argmin, lp);
            for (long i = 0; i < g.count_xd; ++i) s = s * level_symbol(b_xd, lp);
            for (long i = 0; i < g.count_d; ++i) s = s * level_symbol(b_d, lp);
            for (long i = 0; i < g.count_x2d; ++i) s = s * level_symbol(b_x2d, lp);

            Rat target = pow_rat(Rat(lp.p), rep.bound) *
                         dp_coeff(static_cast<unsigned long>(d), lp).value;
            bool shape = s.degree == d && s.coeff == Poly::monomial(k, s.coeff.coeff(k));
            Rat mu = shape ? target / s.coeff.coeff(k) : Rat(0);
            if (!shape || !p_integral(mu, lp.p)) rep.covers_range = false;
        }
    if (rep.range_bound > rep.bound) rep.covers_range = false;

    return rep;
}

}  // namespace pado
