#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace pado {

using Int = mpz_class;
using Rat = mpq_class;

/* p-adic valuation; `infinite` encodes vp(0) = +inf. */
struct Valuation {
    long value = 0;
    bool infinite = false;

    static Valuation inf() { return Valuation{0, true}; }
    static Valuation of(long v) { return Valuation{v, false}; }

    bool operator==(const Valuation&) const = default;

    bool operator>=(long b) const { return infinite || value >= b; }
    bool operator<(long b) const { return !(*this >= b); }

    Valuation operator+(const Valuation& o) const {
        if (infinite || o.infinite) return inf();
        return of(value + o.value);
    }

    friend Valuation min(const Valuation& a, const Valuation& b) {
        if (a.infinite) return b;
        if (b.infinite) return a;
        return of(a.value < b.value ? a.value : b.value);
    }

    std::string str() const { return infinite ? "inf" : std::to_string(value); }
};

bool is_prime(const Int& p);
void require_prime(const Int& p);

/* vp(x): exact valuation of an integer or rational at a prime p. */
Valuation vp(const Int& x, const Int& p);
Valuation vp(const Rat& x, const Int& p);
inline Valuation vp(const Rat& x, long p) { return vp(x, Int(p)); }
inline Valuation vp(const Int& x, long p) { return vp(x, Int(p)); }

/* vp(x) >= 0, i.e. x lies in Z localized at p. */
bool p_integral(const Rat& x, const Int& p);
inline bool p_integral(const Rat& x, long p) { return p_integral(x, Int(p)); }

/* Canonicalized num/den; throws on zero denominator. */
Rat make_rat(Int num, Int den);

Int pow_int(const Int& base, unsigned long e);
Rat pow_rat(const Rat& base, long e);

/* Always prints an explicit denominator: "-3/2", "7/1". */
std::string rat_str(const Rat& x);

/* Accepts "a" and "a/b", optional leading '-'. */
Rat parse_rat(const std::string& text);

}  // namespace pado
