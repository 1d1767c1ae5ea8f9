#pragma once

#include <optional>
#include <string>

#include "pado/mpoly.hpp"

namespace pado {

// Coordinate ring of the level-n congruence group: for n >= 1 a matrix
// is 1 + p^n (a b; c d), for n = 0 the coordinates are the matrix
// entries themselves.  Vars 0..3 hold a, b, c, d; comultiplication
// lands in vars 0..7 with the primed copy at 4..7.

MPoly comult_image(int n, long p, int var);
MPoly comult(int n, long p, const MPoly& f);

// Determinant-like element: n >= 1: (1+p^n a)(1+p^n d) - p^{2n} b c;
// n = 0: a d - b c.
MPoly delta_poly(int n, long p);

// Restriction map from level n-1 coordinates to level n coordinates,
// n >= 1.  On generators: n = 1: a -> 1 + p a, b -> p b, ...;
// n >= 2: every coordinate picks up one factor of p.
MPoly transition_image(int n, long p, int var);
MPoly transition(int n, long p, const MPoly& f);

bool comult_coassociative(int n, long p);
bool counit_laws_hold(int n, long p);
bool delta_grouplike(int n, long p);
bool transition_compatible(int n, long p);
bool transition_maps_delta(int n, long p);

struct HopfReport {
    bool ok = true;
    std::optional<std::string> failure;
};

HopfReport check_hopf(long p, int max_n);

}  // namespace pado
