#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pado/hopf.hpp"

using namespace pado;

TEST_CASE("comultiplication formulas") {
    // n = 0: matrix entry rule a -> a a' + b c'
    MPoly a = MPoly::variable(0), b = MPoly::variable(1);
    MPoly ap = MPoly::variable(4), cp = MPoly::variable(6);
    CHECK(comult_image(0, 2, 0) == a * ap + b * cp);

    // n = 1, p = 2: a -> a + a' + 2(a a' + b c')
    CHECK(comult_image(1, 2, 0) == a + ap + (a * ap + b * cp) * Rat(2));

    // the identity (all coordinates zero) is sent to the group unit
    for (int g = 0; g < 4; ++g) {
        MPoly img = comult_image(2, 3, g);
        MPoly at_zero = img.substitute([](int v) {
            if (v < 4) return MPoly();
            return MPoly::variable(v - 4);
        });
        CHECK(at_zero == MPoly::variable(g));
    }
}

TEST_CASE("hopf axioms across levels") {
    for (long p : {2L, 3L, 5L}) {
        for (int n = 0; n <= 3; ++n) {
            CAPTURE(p);
            CAPTURE(n);
            CHECK(comult_coassociative(n, p));
            CHECK(counit_laws_hold(n, p));
            CHECK(delta_grouplike(n, p));
        }
    }
}

TEST_CASE("transition maps") {
    // n = 1 restriction on generators
    CHECK(transition_image(1, 2, 0) == MPoly(Rat(1)) + MPoly::variable(0) * Rat(2));
    CHECK(transition_image(1, 2, 1) == MPoly::variable(1) * Rat(2));
    CHECK(transition_image(2, 3, 0) == MPoly::variable(0) * Rat(3));

    for (long p : {2L, 3L, 5L}) {
        for (int n = 1; n <= 3; ++n) {
            CAPTURE(p);
            CAPTURE(n);
            CHECK(transition_compatible(n, p));
            CHECK(transition_maps_delta(n, p));
        }
    }
}

TEST_CASE("aggregate report") {
    HopfReport ok = check_hopf(2, 3);
    CHECK(ok.ok);
    CHECK(!ok.failure.has_value());
}
