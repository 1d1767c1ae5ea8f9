#pragma once

#include "pado/levels.hpp"
#include "pado/symbol.hpp"

namespace pado {

/*
 * One-step factorization of the graded generator (q_d!/d!) x^k D^d, k <= 2d,
 * through the three weight-p^m building blocks
 *   (x D)^(p^m)/p^m!,  D^(p^m)/p^m!,  (x^2 D)^(p^m)/p^m!
 * times a residual piece of order < 2p^m, with an explicit p-unit u.
 * Writing d = p^m q + s and k = p^m q' + r, the block counts depend on
 * whether k <= d, on the parity of q' when k > d, and on whether the
 * leftover x-power fits the residual order; generators with d < 2p^m are
 * returned as their own residual.
 */
struct GenerationStep {
    int d = 0;
    int k = 0;
    bool trivial = false;

    unsigned long q = 0, s = 0, qp = 0, r = 0;

    long count_xd = 0;
    long count_d = 0;
    long count_x2d = 0;

    int residual_d = 0;
    int residual_k = 0;
    Rat residual_scale;

    Rat unit;
    bool unit_is_p_unit = false;
    bool residual_small = false;
    bool recombines = false;

    bool certified() const { return unit_is_p_unit && residual_small && recombines; }
};

GenerationStep graded_generation(int d, int k, const LevelParams& lp);

}  // namespace pado
