#pragma once

#include <map>

#include "pado/poly.hpp"

namespace pado {

/* Laurent polynomial: finitely many terms, exponents may be negative. */
class Laurent {
public:
    Laurent() = default;
    explicit Laurent(const Poly& f) {
        for (const auto& [k, v] : f.coeffs()) c_[k] = v;
    }

    static Laurent monomial(int k, const Rat& c) {
        Laurent l;
        if (c != 0) l.c_[k] = c;
        return l;
    }

    /* f(1/y) as a Laurent polynomial in y */
    static Laurent reciprocal_arg(const Poly& f) {
        Laurent l;
        for (const auto& [k, v] : f.coeffs()) l.c_[-k] = v;
        return l;
    }

    bool is_zero() const { return c_.empty(); }
    const std::map<int, Rat>& coeffs() const { return c_; }
    int min_exp() const { return c_.empty() ? 0 : c_.begin()->first; }

    void add_coeff(int k, const Rat& v) {
        auto it = c_.find(k);
        Rat s = (it == c_.end() ? Rat(0) : it->second) + v;
        if (s == 0)
            c_.erase(k);
        else
            c_[k] = s;
    }

    Laurent operator+(const Laurent& o) const {
        Laurent r = *this;
        for (const auto& [k, v] : o.c_) r.add_coeff(k, v);
        return r;
    }
    Laurent operator*(const Laurent& o) const {
        Laurent r;
        for (const auto& [k1, v1] : c_)
            for (const auto& [k2, v2] : o.c_) r.add_coeff(k1 + k2, v1 * v2);
        return r;
    }
    Laurent operator*(const Rat& s) const {
        Laurent r;
        if (s == 0) return r;
        for (const auto& [k, v] : c_) r.c_[k] = v * s;
        return r;
    }
    bool operator==(const Laurent& o) const { return c_ == o.c_; }

    bool is_polynomial() const { return c_.empty() || c_.begin()->first >= 0; }

    Poly to_poly() const {
        if (!is_polynomial()) throw std::invalid_argument("Laurent has negative exponents");
        Poly f;
        for (const auto& [k, v] : c_) f.set_coeff(k, v);
        return f;
    }

private:
    std::map<int, Rat> c_;
};

}  // namespace pado
