#pragma once

#include <map>
#include <string>

#include "pado/rational.hpp"

namespace pado {

/* Univariate polynomial with exact rational coefficients, sparse. */
class Poly {
public:
    Poly() = default;
    explicit Poly(const Rat& constant) { set_coeff(0, constant); }
    explicit Poly(long constant) { set_coeff(0, Rat(constant)); }

    static Poly monomial(int k, const Rat& c) {
        Poly f;
        f.set_coeff(k, c);
        return f;
    }
    static Poly variable() { return monomial(1, Rat(1)); }

    bool is_zero() const { return c_.empty(); }
    /* degree of the zero polynomial is the sentinel -1 (stands in for -inf) */
    int degree() const { return c_.empty() ? -1 : c_.rbegin()->first; }

    const std::map<int, Rat>& coeffs() const { return c_; }
    Rat coeff(int k) const {
        auto it = c_.find(k);
        return it == c_.end() ? Rat(0) : it->second;
    }
    void set_coeff(int k, const Rat& v) {
        if (k < 0) throw std::invalid_argument("negative exponent in Poly");
        if (v == 0)
            c_.erase(k);
        else
            c_[k] = v;
    }
    void add_coeff(int k, const Rat& v) { set_coeff(k, coeff(k) + v); }

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const Rat& s) const;
    Poly operator-() const { return *this * Rat(-1); }
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    bool operator==(const Poly& o) const { return c_ == o.c_; }

    Poly derivative(int times = 1) const;
    Rat eval(const Rat& x) const;
    Poly pow(unsigned long e) const;

    std::string str(const std::string& var = "x") const;

private:
    std::map<int, Rat> c_;
};

inline Poly operator*(const Rat& s, const Poly& f) { return f * s; }

/* coefficients c_k with f = sum_k c_k (x-a)^k, i.e. the expansion of f(a+u) */
Poly taylor_shift(const Poly& f, const Rat& a);

/* f(s*t) */
Poly scale_arg(const Poly& f, const Rat& s);

/* y^n * f(1/y); requires deg f <= n */
Poly reversed(const Poly& f, int n);

/* min coefficient valuation; inf for the zero polynomial */
Valuation min_vp(const Poly& f, const Int& p);
bool all_p_integral(const Poly& f, const Int& p);

}  // namespace pado
