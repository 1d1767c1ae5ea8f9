#include "pado/poly.hpp"

namespace pado {

Poly Poly::operator+(const Poly& o) const {
    Poly r = *this;
    for (const auto& [k, v] : o.c_) r.add_coeff(k, v);
    return r;
}

Poly Poly::operator-(const Poly& o) const {
    Poly r = *this;
    for (const auto& [k, v] : o.c_) r.add_coeff(k, -v);
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    Poly r;
    for (const auto& [k1, v1] : c_)
        for (const auto& [k2, v2] : o.c_) r.add_coeff(k1 + k2, v1 * v2);
    return r;
}

Poly Poly::operator*(const Rat& s) const {
    Poly r;
    if (s == 0) return r;
    for (const auto& [k, v] : c_) r.c_[k] = v * s;
    return r;
}

Poly Poly::derivative(int times) const {
    Poly r = *this;
    for (int t = 0; t < times; ++t) {
        Poly d;
        for (const auto& [k, v] : r.c_)
            if (k > 0) d.set_coeff(k - 1, v * Rat(k));
        r = d;
    }
    return r;
}

Rat Poly::eval(const Rat& x) const {
    // Horner on the dense range
    Rat acc(0);
    int prev = -1;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        if (prev >= 0) acc *= pow_rat(x, prev - it->first);
        acc += it->second;
        prev = it->first;
    }
    if (prev > 0) acc *= pow_rat(x, prev);
    return acc;
}

Poly Poly::pow(unsigned long e) const {
    Poly r(Rat(1));
    Poly b = *this;
    while (e > 0) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

std::string Poly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (const auto& [k, v] : c_) {
        if (!out.empty()) out += " + ";
        out += rat_str(v) + "*" + var + "^" + std::to_string(k);
    }
    return out;
}

Poly taylor_shift(const Poly& f, const Rat& a) {
    // Horner with exponent gaps: f(a+u) built from the top coefficient down
    if (f.is_zero()) return Poly();
    Poly shift = Poly::variable() + Poly(a);
    Poly r;
    int prev = -1;
    for (auto it = f.coeffs().rbegin(); it != f.coeffs().rend(); ++it) {
        if (prev >= 0)
            for (int t = 0; t < prev - it->first; ++t) r *= shift;
        r.add_coeff(0, it->second);
        prev = it->first;
    }
    for (int t = 0; t < prev; ++t) r *= shift;
    return r;
}

Poly scale_arg(const Poly& f, const Rat& s) {
    Poly r;
    for (const auto& [k, v] : f.coeffs()) r.set_coeff(k, v * pow_rat(s, k));
    return r;
}

Poly reversed(const Poly& f, int n) {
    if (f.degree() > n) throw std::invalid_argument("reversed: degree exceeds bound");
    Poly r;
    for (const auto& [k, v] : f.coeffs()) r.set_coeff(n - k, v);
    return r;
}

Valuation min_vp(const Poly& f, const Int& p) {
    Valuation m = Valuation::inf();
    for (const auto& [k, v] : f.coeffs()) m = min(m, vp(v, p));
    return m;
}

bool all_p_integral(const Poly& f, const Int& p) { return min_vp(f, p) >= 0; }

}  // namespace pado
