#include "pado/mpoly.hpp"

#include <stdexcept>

namespace pado {

namespace {

MPoly::Exps add_exps(const MPoly::Exps& a, const MPoly::Exps& b) {
    MPoly::Exps r{};
    for (int i = 0; i < MPoly::kMaxVars; ++i) {
        int s = int(a[i]) + int(b[i]);
        if (s > 255) throw std::overflow_error("mpoly exponent overflow");
        r[i] = static_cast<uint8_t>(s);
    }
    return r;
}

}  // namespace

MPoly::MPoly(const Rat& constant) {
    if (constant != 0) c_[Exps{}] = constant;
}

MPoly MPoly::variable(int v) {
    if (v < 0 || v >= kMaxVars) throw std::invalid_argument("mpoly variable index out of range");
    Exps e{};
    e[v] = 1;
    return monomial(e);
}

MPoly MPoly::monomial(const Exps& e, const Rat& coeff) {
    MPoly f;
    if (coeff != 0) f.c_[e] = coeff;
    return f;
}

int MPoly::total_degree() const {
    int d = -1;
    for (const auto& [e, v] : c_) {
        int t = 0;
        for (int i = 0; i < kMaxVars; ++i) t += e[i];
        if (t > d) d = t;
    }
    return d;
}

Rat MPoly::coeff(const Exps& e) const {
    auto it = c_.find(e);
    return it == c_.end() ? Rat(0) : it->second;
}

void MPoly::add_coeff(const Exps& e, const Rat& v) {
    auto it = c_.find(e);
    if (it == c_.end()) {
        if (v != 0) c_[e] = v;
        return;
    }
    it->second += v;
    if (it->second == 0) c_.erase(it);
}

MPoly MPoly::operator+(const MPoly& o) const {
    MPoly r = *this;
    for (const auto& [e, v] : o.c_) r.add_coeff(e, v);
    return r;
}

MPoly MPoly::operator-(const MPoly& o) const {
    MPoly r = *this;
    for (const auto& [e, v] : o.c_) r.add_coeff(e, -v);
    return r;
}

MPoly MPoly::operator*(const MPoly& o) const {
    MPoly r;
    for (const auto& [e1, v1] : c_)
        for (const auto& [e2, v2] : o.c_) r.add_coeff(add_exps(e1, e2), v1 * v2);
    return r;
}

MPoly MPoly::operator*(const Rat& s) const {
    MPoly r;
    if (s == 0) return r;
    for (const auto& [e, v] : c_) r.c_[e] = v * s;
    return r;
}

MPoly MPoly::operator-() const { return *this * Rat(-1); }

MPoly MPoly::substitute(const std::function<MPoly(int)>& image) const {
    // cache images and their powers per call
    std::array<std::vector<MPoly>, kMaxVars> powers;
    auto power = [&](int v, int e) -> const MPoly& {
        auto& tab = powers[v];
        if (tab.empty()) {
            tab.push_back(MPoly(Rat(1)));
            tab.push_back(image(v));
        }
        while (static_cast<int>(tab.size()) <= e) tab.push_back(tab.back() * tab[1]);
        return tab[e];
    };
    MPoly r;
    for (const auto& [e, v] : c_) {
        MPoly t(v);
        for (int i = 0; i < kMaxVars; ++i)
            if (e[i] > 0) t = t * power(i, e[i]);
        r = r + t;
    }
    return r;
}

Rat MPoly::eval(const std::array<Rat, kMaxVars>& point) const {
    Rat r(0);
    for (const auto& [e, v] : c_) {
        Rat t = v;
        for (int i = 0; i < kMaxVars; ++i)
            for (int k = 0; k < e[i]; ++k) t *= point[i];
        r += t;
    }
    return r;
}

std::string MPoly::str(const std::vector<std::string>& names) const {
    if (c_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [e, v] : c_) {
        if (!first) s += " + ";
        first = false;
        s += rat_str(v);
        for (int i = 0; i < kMaxVars; ++i) {
            if (e[i] == 0) continue;
            s += "*";
            s += (i < static_cast<int>(names.size())) ? names[i] : ("x" + std::to_string(i));
            s += "^" + std::to_string(int(e[i]));
        }
    }
    return s;
}

MPoly rename_block(const MPoly& f, int offset) {
    MPoly r;
    for (const auto& [e, v] : f.terms()) {
        MPoly::Exps t{};
        for (int i = 0; i < MPoly::kMaxVars; ++i) {
            if (e[i] == 0) continue;
            int j = i + offset;
            if (j < 0 || j >= MPoly::kMaxVars) throw std::invalid_argument("rename_block out of range");
            t[j] = e[i];
        }
        r.add_coeff(t, v);
    }
    return r;
}

}  // namespace pado
