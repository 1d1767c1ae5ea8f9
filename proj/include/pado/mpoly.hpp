#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "pado/rational.hpp"

namespace pado {

// Polynomial in up to kMaxVars commuting variables over Q, sparse.
// Vars are indexed 0..kMaxVars-1; unused slots simply stay at zero.
class MPoly {
public:
    static constexpr int kMaxVars = 12;
    using Exps = std::array<uint8_t, kMaxVars>;

    MPoly() = default;
    explicit MPoly(const Rat& constant);
    static MPoly variable(int v);
    static MPoly monomial(const Exps& e, const Rat& coeff = Rat(1));

    bool is_zero() const { return c_.empty(); }
    int total_degree() const;  // -1 for the zero polynomial
    Rat coeff(const Exps& e) const;
    void add_coeff(const Exps& e, const Rat& v);
    const std::map<Exps, Rat>& terms() const { return c_; }

    MPoly operator+(const MPoly& o) const;
    MPoly operator-(const MPoly& o) const;
    MPoly operator*(const MPoly& o) const;
    MPoly operator*(const Rat& s) const;
    MPoly operator-() const;
    bool operator==(const MPoly& o) const { return c_ == o.c_; }
    bool operator!=(const MPoly& o) const { return !(*this == o); }

    // Algebra morphism determined by images of the variables.  Only
    // variables that actually occur need an image.
    MPoly substitute(const std::function<MPoly(int)>& image) const;

    Rat eval(const std::array<Rat, kMaxVars>& point) const;

    std::string str(const std::vector<std::string>& names) const;

private:
    std::map<Exps, Rat> c_;
};

// Same polynomial with every variable index shifted up by `offset`.
MPoly rename_block(const MPoly& f, int offset);

}  // namespace pado
