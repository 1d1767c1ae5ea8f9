#pragma once

#include "pado/rational.hpp"

namespace pado {

/* Parameter pack (p, m, n): prime p, divided-power level m >= 0, congruence level n >= 0. */
struct LevelParams {
    long p;
    int m;
    int n;

    explicit LevelParams(long p_, int m_ = 0, int n_ = 0) : p(p_), m(m_), n(n_) {
        require_prime(Int(p));
        if (m < 0 || n < 0) throw std::invalid_argument("levels m, n must be >= 0");
    }

    Int pint() const { return Int(p); }
    Int pm() const { return pow_int(Int(p), static_cast<unsigned long>(m)); }  // p^m
    Int pn() const { return pow_int(Int(p), static_cast<unsigned long>(n)); }  // p^n

    LevelParams with_n(int n_) const { return LevelParams(p, m, n_); }
    LevelParams with_m(int m_) const { return LevelParams(p, m_, n); }
};

/* floor(nu / p^m) */
inline unsigned long q_floor(unsigned long nu, const LevelParams& lp) {
    Int q = Int(nu) / lp.pm();
    return q.get_ui();
}

}  // namespace pado
