#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "pado/diff_op.hpp"
#include "pado/factorials.hpp"
#include "pado/op_text.hpp"
#include "pado/symbol.hpp"

using namespace pado;

namespace {

Poly random_poly(std::mt19937_64& rng, int max_deg, long coeff_bound) {
    std::uniform_int_distribution<int> deg(0, max_deg);
    std::uniform_int_distribution<long> num(-coeff_bound, coeff_bound);
    std::uniform_int_distribution<long> den(1, coeff_bound);
    Poly f;
    int d = deg(rng);
    for (int k = 0; k <= d; ++k) f.add_coeff(k, make_rat(Int(num(rng)), Int(den(rng))));
    return f;
}

DiffOp random_op(std::mt19937_64& rng, Chart chart, int max_order, int max_deg) {
    std::uniform_int_distribution<int> ord(0, max_order);
    DiffOp a(chart);
    int top = ord(rng);
    for (int k = 0; k <= top; ++k) a.add_term(k, random_poly(rng, max_deg, 6));
    return a;
}

}  // namespace

TEST_CASE("poly basics") {
    Poly f = Poly::monomial(3, Rat(9)) - Poly::monomial(1, Rat(9));  // 9x^3 - 9x
    CHECK(f.degree() == 3);
    CHECK(f.eval(Rat(2)) == Rat(54));
    CHECK(f.derivative().coeff(2) == Rat(27));
    CHECK(Poly().degree() == -1);
    CHECK_THROWS_AS(Poly::monomial(-1, Rat(1)), std::invalid_argument);
}

TEST_CASE("taylor shift") {
    Poly f = Poly::monomial(3, Rat(9)) - Poly::monomial(1, Rat(9));
    Poly c = taylor_shift(f, Rat(1));
    CHECK(c.coeff(0) == Rat(0));
    CHECK(c.coeff(1) == Rat(18));
    CHECK(c.coeff(2) == Rat(27));
    CHECK(c.coeff(3) == Rat(9));

    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> pick(-20, 20);
    for (int t = 0; t < 200; ++t) {
        Poly g = random_poly(rng, 8, 12);
        Rat a = Rat(pick(rng));
        // round trip and point evaluation
        CHECK(taylor_shift(taylor_shift(g, a), -a) == g);
        Rat x0 = Rat(pick(rng));
        CHECK(taylor_shift(g, a).eval(x0) == g.eval(a + x0));
    }
}

TEST_CASE("poly helpers") {
    Poly f = Poly::monomial(2, Rat(3)) + Poly(Rat(5));
    CHECK(scale_arg(f, Rat(2)).coeff(2) == Rat(12));
    CHECK(reversed(f, 2).coeff(0) == Rat(3));
    CHECK(reversed(f, 2).coeff(2) == Rat(5));
    CHECK(reversed(f, 4).coeff(2) == Rat(3));
    CHECK_THROWS_AS(reversed(f, 1), std::invalid_argument);
    CHECK(min_vp(f, Int(3)) == Valuation::of(0));
    CHECK(min_vp(Poly(), Int(3)).infinite);
}

TEST_CASE("composition and the Leibniz rule") {
    DiffOp d = DiffOp::d(Chart::X);
    DiffOp x = DiffOp::coord(Chart::X);
    // D x = x D + 1
    DiffOp dx = compose(d, x);
    CHECK(dx.coeff(1) == Poly::variable());
    CHECK(dx.coeff(0) == Poly(Rat(1)));
    // bracket [D, x] = 1
    DiffOp br = dx - compose(x, d);
    CHECK(br == DiffOp::one(Chart::X));

    std::mt19937_64 rng(11);
    for (int t = 0; t < 150; ++t) {
        DiffOp a = random_op(rng, Chart::X, 3, 3);
        DiffOp b = random_op(rng, Chart::X, 3, 3);
        DiffOp c = random_op(rng, Chart::X, 2, 3);
        CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
        CHECK(compose(a, b + c) == compose(a, b) + compose(a, c));
        if (!a.is_zero() && !b.is_zero()) {
            CHECK(compose(a, b).order() == a.order() + b.order());
            // principal symbol is multiplicative
            CHECK(symbol_of(compose(a, b)) == symbol_of(a) * symbol_of(b));
        }
    }
}

TEST_CASE("operator binomials") {
    DiffOp euler = compose(DiffOp::coord(Chart::X), DiffOp::d(Chart::X));  // x D
    for (unsigned long nu = 0; nu <= 8; ++nu) {
        DiffOp lhs = binomial_of_operator(euler, nu);
        DiffOp rhs = DiffOp::term(Chart::X, static_cast<int>(nu),
                                  Poly::monomial(static_cast<int>(nu), make_rat(Int(1), factorial(nu))));
        CHECK(lhs == rhs);
    }
    // (D choose 2) = D(D-1)/2
    DiffOp d = DiffOp::d(Chart::X);
    DiffOp b2 = binomial_of_operator(d, 2);
    CHECK(b2 == DiffOp::term(Chart::X, 2, Poly(make_rat(Int(1), Int(2)))) -
                    DiffOp::term(Chart::X, 1, Poly(make_rat(Int(1), Int(2)))));
}

TEST_CASE("chart swap on the standard vector fields") {
    DiffOp d = DiffOp::d(Chart::X);
    DiffOp xd = compose(DiffOp::coord(Chart::X), d);
    DiffOp x2d = compose(DiffOp::coord(Chart::X, 2), d);

    CHECK(chart_swap(d) == DiffOp::term(Chart::Y, 1, Poly::monomial(2, Rat(-1))));
    CHECK(chart_swap(xd) == DiffOp::term(Chart::Y, 1, Poly::monomial(1, Rat(-1))));
    CHECK(chart_swap(x2d) == DiffOp::term(Chart::Y, 1, Poly(Rat(-1))));

    // x^3 D does not extend
    DiffOp x3d = compose(DiffOp::coord(Chart::X, 3), d);
    CHECK(!try_chart_swap(x3d).has_value());
    CHECK_THROWS_AS(chart_swap(x3d), std::invalid_argument);

    // x^4 D^2 alone does not extend either; its global completion does
    DiffOp x4d2 = compose(DiffOp::coord(Chart::X, 4), DiffOp::d(Chart::X, 2));
    CHECK(!try_chart_swap(x4d2).has_value());
    CHECK(try_chart_swap(compose(x2d, x2d)).has_value());
}

TEST_CASE("chart swap is involutive") {
    std::mt19937_64 rng(13);
    std::uniform_int_distribution<int> pick(0, 2);
    for (int t = 0; t < 120; ++t) {
        // random words in the globally extendable fields D, xD, x^2 D
        DiffOp a = DiffOp::one(Chart::X);
        int len = pick(rng) + 1;
        for (int i = 0; i < len; ++i) {
            int which = pick(rng);
            DiffOp v = which == 0   ? DiffOp::d(Chart::X)
                       : which == 1 ? compose(DiffOp::coord(Chart::X), DiffOp::d(Chart::X))
                                    : compose(DiffOp::coord(Chart::X, 2), DiffOp::d(Chart::X));
            a = compose(a, v);
        }
        DiffOp b = chart_swap(a);
        CHECK(chart_swap(b) == a);
        CHECK(b.chart() == Chart::Y);
    }
}

TEST_CASE("level-m global sections") {
    LevelParams l20(2, 0), l21(2, 1), l31(3, 1);
    DiffOp d = DiffOp::d(Chart::X);
    DiffOp xd = compose(DiffOp::coord(Chart::X), d);
    DiffOp x2d = compose(DiffOp::coord(Chart::X, 2), d);
    for (const auto& lp : {l20, l21, l31}) {
        CHECK(is_global_section_level_m(d, lp));
        CHECK(is_global_section_level_m(xd, lp));
        CHECK(is_global_section_level_m(x2d, lp));
    }
    CHECK(!is_global_section_level_m(d * make_rat(Int(1), Int(2)), l20));
    CHECK(!is_global_section_level_m(compose(DiffOp::coord(Chart::X, 3), d), l20));
    // x^4 D^2 is not global; (x^2 D)^2 = x^4 D^2 + 2x^3 D is
    CHECK(!is_global_section_level_m(compose(DiffOp::coord(Chart::X, 4), DiffOp::d(Chart::X, 2)), l20));
    CHECK(is_global_section_level_m(compose(x2d, x2d), l20));
    // divided square of the Euler field: (x^2 D^2 + 2xD)/2, global at (2,1) but not (2,0)
    DiffOp half_sq = (compose(xd, xd) + xd) * make_rat(Int(1), Int(2));
    CHECK(is_global_section_level_m(half_sq, l21));
    CHECK(!is_global_section_level_m(half_sq, l20));
    CHECK_THROWS_AS(is_global_section_level_m(DiffOp::d(Chart::Y), l20), std::invalid_argument);
}

TEST_CASE("symbols") {
    auto basis = h0_tensor_basis(3);
    CHECK(basis.size() == 7);
    CHECK(basis[4].coeff == Poly::monomial(4, Rat(1)));
    CHECK(basis[4].degree == 3);
    for (const auto& s : basis) CHECK(is_global_symbol(s));
    CHECK(!is_global_symbol(GradedSymbol(1, Poly::monomial(3, Rat(1)))));

    GradedSymbol s = symbol_of(compose(DiffOp::coord(Chart::X, 2), DiffOp::d(Chart::X)));
    CHECK(s.degree == 1);
    CHECK(s.coeff == Poly::monomial(2, Rat(1)));

    // swap on symbols is an involution with sign (-1)^d
    GradedSymbol t(2, Poly::monomial(3, Rat(5)) + Poly(Rat(1)));
    CHECK(symbol_chart_swap(symbol_chart_swap(t)) == t);
    CHECK(symbol_chart_swap(t).coeff.coeff(1) == Rat(5));
    CHECK(symbol_chart_swap(t).coeff.coeff(4) == Rat(1));
    CHECK_THROWS_AS(symbol_of(DiffOp::zero(Chart::X)), std::invalid_argument);
}

TEST_CASE("operator text grammar") {
    DiffOp a = DiffOp::term(Chart::X, 2, Poly::monomial(2, make_rat(Int(1), Int(2)))) -
               DiffOp::term(Chart::X, 0, Poly(Rat(1)));
    std::string text = op_to_text(a);
    CHECK(text == "-1/1*x^0*Dx^0 + 1/2*x^2*Dx^2");
    CHECK(op_from_text(text) == a);

    CHECK(op_from_text("  1/2 * x^2\t* Dx^2+-1/1*x^0*Dx^0 ") == a);
    CHECK(op_to_text(DiffOp::zero(Chart::Y)) == "0/1*y^0*Dy^0");
    CHECK(op_from_text("2/1*y^1*Dy^3").chart() == Chart::Y);

    CHECK_THROWS_AS(op_from_text("1/2*x^2*Dy^2"), std::invalid_argument);
    CHECK_THROWS_AS(op_from_text("1/2*x^2*Dx^2 + 1/1*y^0*Dy^0"), std::invalid_argument);
    CHECK_THROWS_AS(op_from_text("1/0*x^0*Dx^0"), std::invalid_argument);
    CHECK_THROWS_AS(op_from_text("x^2*Dx^2"), std::invalid_argument);
    CHECK_THROWS_AS(op_from_text(""), std::invalid_argument);

    std::mt19937_64 rng(17);
    for (int t = 0; t < 100; ++t) {
        DiffOp b = random_op(rng, t % 2 ? Chart::X : Chart::Y, 4, 5);
        CHECK(op_from_text(op_to_text(b)) == b);
    }
}
