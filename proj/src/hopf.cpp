#include "pado/hopf.hpp"

#include <stdexcept>

#include "pado/rational.hpp"

namespace pado {

namespace {

void require_level(int n) {
    if (n < 0) throw std::invalid_argument("congruence level must be >= 0");
}

MPoly var(int v) { return MPoly::variable(v); }

}  // namespace

MPoly comult_image(int n, long p, int var_index) {
    require_level(n);
    if (var_index < 0 || var_index > 3) throw std::invalid_argument("comult_image: bad variable");
    MPoly a = var(0), b = var(1), c = var(2), d = var(3);
    MPoly ap = var(4), bp = var(5), cp = var(6), dp = var(7);
    MPoly row_products[4] = {a * ap + b * cp, a * bp + b * dp, c * ap + d * cp, c * bp + d * dp};
    if (n == 0) return row_products[var_index];
    Rat pn = pow_rat(Rat(p), n);
    MPoly sums[4] = {a + ap, b + bp, c + cp, d + dp};
    return sums[var_index] + row_products[var_index] * pn;
}

MPoly comult(int n, long p, const MPoly& f) {
    return f.substitute([&](int v) { return comult_image(n, p, v); });
}

MPoly delta_poly(int n, long p) {
    require_level(n);
    if (n == 0) return var(0) * var(3) - var(1) * var(2);
    Rat pn = pow_rat(Rat(p), n);
    MPoly one(Rat(1));
    return (one + var(0) * pn) * (one + var(3) * pn) - var(1) * var(2) * (pn * pn);
}

MPoly transition_image(int n, long p, int var_index) {
    if (n < 1) throw std::invalid_argument("transition needs n >= 1");
    if (var_index < 0 || var_index > 3) throw std::invalid_argument("transition_image: bad variable");
    MPoly scaled = var(var_index) * Rat(p);
    if (n == 1 && (var_index == 0 || var_index == 3)) return MPoly(Rat(1)) + scaled;
    return scaled;
}

MPoly transition(int n, long p, const MPoly& f) {
    return f.substitute([&](int v) { return transition_image(n, p, v); });
}

bool comult_coassociative(int n, long p) {
    for (int g = 0; g < 4; ++g) {
        MPoly once = comult_image(n, p, g);
        MPoly lhs = once.substitute([&](int v) {
            if (v < 4) return comult_image(n, p, v);
            return MPoly::variable(v + 4);
        });
        MPoly rhs = once.substitute([&](int v) {
            if (v < 4) return MPoly::variable(v);
            return rename_block(comult_image(n, p, v - 4), 4);
        });
        if (lhs != rhs) return false;
    }
    return true;
}

bool counit_laws_hold(int n, long p) {
    // counit = evaluation at the identity: all coordinates 0 for n >= 1,
    // (1,0,0,1) for n = 0.
    Rat id_vals[4] = {Rat(n == 0 ? 1 : 0), Rat(0), Rat(0), Rat(n == 0 ? 1 : 0)};
    for (int g = 0; g < 4; ++g) {
        MPoly once = comult_image(n, p, g);
        MPoly left = once.substitute([&](int v) {
            if (v < 4) return MPoly(id_vals[v]);
            return MPoly::variable(v - 4);
        });
        MPoly right = once.substitute([&](int v) {
            if (v < 4) return MPoly::variable(v);
            return MPoly(id_vals[v - 4]);
        });
        if (left != MPoly::variable(g) || right != MPoly::variable(g)) return false;
    }
    return true;
}

bool delta_grouplike(int n, long p) {
    MPoly dl = delta_poly(n, p);
    return comult(n, p, dl) == dl * rename_block(dl, 4);
}

bool transition_compatible(int n, long p) {
    if (n < 1) throw std::invalid_argument("transition needs n >= 1");
    for (int g = 0; g < 4; ++g) {
        MPoly lhs = comult(n, p, transition_image(n, p, g));
        MPoly rhs = comult_image(n - 1, p, g).substitute([&](int v) {
            if (v < 4) return transition_image(n, p, v);
            return rename_block(transition_image(n, p, v - 4), 4);
        });
        if (lhs != rhs) return false;
    }
    return true;
}

bool transition_maps_delta(int n, long p) {
    return transition(n, p, delta_poly(n - 1, p)) == delta_poly(n, p);
}

HopfReport check_hopf(long p, int max_n) {
    HopfReport rep;
    auto fail = [&](int n, const std::string& what) {
        rep.ok = false;
        rep.failure = what + " at p=" + std::to_string(p) + " n=" + std::to_string(n);
    };
    for (int n = 0; n <= max_n && rep.ok; ++n) {
        if (!comult_coassociative(n, p)) return fail(n, "coassociativity"), rep;
        if (!counit_laws_hold(n, p)) return fail(n, "counit"), rep;
        if (!delta_grouplike(n, p)) return fail(n, "determinant grouplike"), rep;
        if (n >= 1 && !transition_compatible(n, p)) return fail(n, "transition compatibility"), rep;
        if (n >= 1 && !transition_maps_delta(n, p)) return fail(n, "transition determinant"), rep;
    }
    return rep;
}

}  // namespace pado
