#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pado/gl_action.hpp"

using namespace pado;

namespace {

std::vector<Mono> monos_up_to(unsigned w) {
    std::vector<Mono> out;
    for (unsigned a = 0; a <= w; ++a)
        for (unsigned b = 0; a + b <= w; ++b)
            for (unsigned c = 0; a + b + c <= w; ++c)
                for (unsigned d = 0; a + b + c + d <= w; ++d) out.push_back({a, b, c, d});
    return out;
}

}  // namespace

TEST_CASE("mpoly arithmetic") {
    MPoly a = MPoly::variable(0);
    MPoly b = MPoly::variable(1);
    MPoly f = (a + b) * (a - b);
    CHECK(f == a * a - b * b);
    CHECK(f.total_degree() == 2);
    CHECK(MPoly().total_degree() == -1);

    MPoly g = f.substitute([](int v) {
        if (v == 0) return MPoly::variable(2) + MPoly(Rat(1));
        return MPoly::variable(v);
    });
    // (c+1)^2 - b^2
    std::array<Rat, MPoly::kMaxVars> pt{};
    pt[1] = Rat(3);
    pt[2] = Rat(2);
    CHECK(g.eval(pt) == Rat(0));

    CHECK(rename_block(f, 4) == MPoly::variable(4) * MPoly::variable(4) -
                                    MPoly::variable(5) * MPoly::variable(5));
}

TEST_CASE("derivation rules") {
    MPoly a = MPoly::variable(kVarA), b = MPoly::variable(kVarB);
    MPoly c = MPoly::variable(kVarC), d = MPoly::variable(kVarD);

    CHECK(apply_gen(GlGen::E, b) == a);
    CHECK(apply_gen(GlGen::E, d) == c);
    CHECK(apply_gen(GlGen::E, a).is_zero());
    CHECK(apply_gen(GlGen::F, a) == b);
    CHECK(apply_gen(GlGen::F, c) == d);
    CHECK(apply_gen(GlGen::H1, a) == a);
    CHECK(apply_gen(GlGen::H2, b) == b);

    // Leibniz on a product
    CHECK(apply_gen(GlGen::E, b * d) == a * d + b * c);

    // determinant is invariant under the traceless combinations
    MPoly det = a * d - b * c;
    CHECK(apply_gen(GlGen::E, det).is_zero());
    CHECK(apply_gen(GlGen::F, det).is_zero());
    CHECK(apply_gen(GlGen::H1, det) == det);
    CHECK(apply_gen(GlGen::H2, det) == det);
}

TEST_CASE("single generator pairings") {
    CHECK(pair_direct({1, 0, 0, 0}, MPoly::variable(kVarB)) == Rat(1));
    CHECK(pair_direct({1, 0, 0, 0}, MPoly::variable(kVarA) - MPoly(Rat(1))) == Rat(0));
    CHECK(pair_direct({0, 1, 0, 0}, MPoly::variable(kVarA) - MPoly(Rat(1))) == Rat(1));
    CHECK(pair_direct({0, 0, 1, 0}, MPoly::variable(kVarD) - MPoly(Rat(1))) == Rat(1));
    CHECK(pair_direct({0, 0, 0, 1}, MPoly::variable(kVarC)) == Rat(1));
}

// The pairing matrix is unitriangular by weight, not the identity:
// entry(nu, mu) = delta whenever |nu| <= |mu|, the diagonal is 1, and the
// off-delta entries (all integers) occur only where |nu| > |mu|.  The
// smallest is <E_{(1,0,0,1)}, a-1> = 1: ef applied to a-1 first sends
// a -> b, then b -> a, and (a)(id) = 1.
TEST_CASE("dual bases, direct route") {
    auto monos = monos_up_to(4);
    for (const Mono& nu : monos) {
        for (const Mono& mu : monos) {
            Rat v = pair_direct(nu, dual_monomial(mu));
            if (mono_weight(nu) <= mono_weight(mu)) CHECK(v == (nu == mu ? Rat(1) : Rat(0)));
            CHECK(v.get_den() == 1);
        }
    }

    // frozen off-delta witnesses at weight <= 2
    CHECK(pair_direct({1, 0, 0, 1}, dual_monomial({0, 1, 0, 0})) == Rat(1));
    CHECK(pair_direct({0, 0, 1, 1}, dual_monomial({0, 0, 0, 1})) == Rat(1));
    CHECK(pair_direct({1, 0, 1, 0}, dual_monomial({1, 0, 0, 0})) == Rat(1));
    // ...and delta still holds on every pair of equal weight at w <= 2
    for (const Mono& nu : monos_up_to(2))
        for (const Mono& mu : monos_up_to(2))
            if (mono_weight(nu) == mono_weight(mu))
                CHECK(pair_direct(nu, dual_monomial(mu)) == (nu == mu ? Rat(1) : Rat(0)));
}

TEST_CASE("dual bases, batched route") {
    PairingTable table(5);
    CHECK(table.index().size() == 126);

    PairingReport rep = table.report();
    CHECK(!rep.kronecker);
    CHECK(rep.kronecker_when_dominated);
    CHECK(rep.all_integer);
    CHECK(rep.pairs_checked == 126u * 126u);
    CHECK(rep.deviations.size() == 126);
    for (const PairingDeviation& d : rep.deviations) CHECK(mono_weight(d.nu) > mono_weight(d.mu));

    // agreement with the direct route on a subgrid
    for (const Mono& nu : monos_up_to(3))
        for (const Mono& mu : monos_up_to(3)) CHECK(table.entry(nu, mu) == pair_direct(nu, dual_monomial(mu)));

    // diagonal entries are 1, including the weight-4 corner case
    for (const Mono& nu : monos_up_to(5)) CHECK(table.entry(nu, nu) == Rat(1));
    CHECK(table.entry({1, 1, 1, 1}, {1, 1, 1, 1}) == Rat(1));

    // scaling by p^{n(|nu|-|mu|)} keeps delta where |nu| <= |mu| and
    // cannot cancel an integer deviation elsewhere
    for (long p : {2L, 3L, 5L}) {
        for (int n = 0; n <= 2; ++n) {
            LevelParams lp(p, 0, n);
            for (const Mono& nu : monos_up_to(3))
                for (const Mono& mu : monos_up_to(3)) {
                    Rat s = table.scaled_entry(nu, mu, lp);
                    if (mono_weight(nu) <= mono_weight(mu))
                        CHECK(s == (nu == mu ? Rat(1) : Rat(0)));
                    else
                        CHECK((s == 0) == (table.entry(nu, mu) == 0));
                }
        }
    }
}

TEST_CASE("binomials do not commute with scaling") {
    // p^{2n} (h choose 2) and (p^n h choose 2) differ by (p^{2n}-p^n)h/2,
    // which pairs nontrivially against a - 1.
    for (long p : {2L, 3L}) {
        for (int n = 1; n <= 2; ++n) {
            Rat pn = pow_rat(Rat(p), n);
            MPoly am1 = MPoly::variable(kVarA) - MPoly(Rat(1));
            // (p^n h1 choose 2) g = (p^n h1)(p^n h1 - 1)/2 g
            MPoly g1 = apply_gen(GlGen::H1, am1) * pn;
            MPoly scaled_binom = (apply_gen(GlGen::H1, g1) * pn - g1) * make_rat(Int(1), Int(2));
            MPoly h2 = apply_gen(GlGen::H1, apply_gen(GlGen::H1, am1));
            MPoly plain_binom = (h2 - apply_gen(GlGen::H1, am1)) * make_rat(Int(1), Int(2)) * (pn * pn);
            Rat diff = eval_at_identity(scaled_binom) - eval_at_identity(plain_binom);
            CHECK(diff == (pn * pn - pn) / Rat(2));
            CHECK(diff != 0);
        }
    }
}
