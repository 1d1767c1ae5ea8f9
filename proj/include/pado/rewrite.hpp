#pragma once

#include "pado/charts.hpp"

namespace pado {

/*
 * Certificate that the global generator p^(n(d-k)) (x-a)^k Dx^(tensor d)
 * becomes z^A x^B * (x^d D^(tensor d)) on the level-nu chart, where x, z are
 * the two chart coordinates with z x = p. Nonnegative A and B exhibit the
 * generator as a section of the log structure there.
 */
struct RewriteCertificate {
    long z_exp = 0;
    long x_extra = 0;
    long x_log = 0;
    bool exponents_ok = false;
    bool recombines = false;
};

/* needs 0 <= k <= d and 1 <= nu <= n; center a only shifts the chart */
RewriteCertificate rewrite_d_certificate(long p, unsigned n, unsigned nu, int d, int k,
                                         const Int& a = Int(0));

/* on a residual disc the same generator pulls back to x^k D^(tensor d) on the nose */
bool rewrite_disc_check(long p, unsigned n, int d, int k, const Int& a = Int(0));

}  // namespace pado
