#pragma once

#include <vector>

#include "pado/diff_op.hpp"
#include "pado/poly.hpp"

namespace pado {

/*
 * Homogeneous symbol f(t) * D^(tensor d): the image of an order-d operator in
 * the d-th graded piece. Symbols multiply commutatively (degrees add).
 */
struct GradedSymbol {
    int degree = 0;
    Poly coeff;

    GradedSymbol() = default;
    GradedSymbol(int d, Poly f) : degree(d), coeff(std::move(f)) {}

    bool is_zero() const { return coeff.is_zero(); }
    bool operator==(const GradedSymbol& o) const { return degree == o.degree && coeff == o.coeff; }
};

GradedSymbol operator*(const GradedSymbol& a, const GradedSymbol& b);
GradedSymbol operator*(const GradedSymbol& a, const Rat& s);
GradedSymbol operator+(const GradedSymbol& a, const GradedSymbol& b);  // same degree only

/* principal symbol; rejects the zero operator */
GradedSymbol symbol_of(const DiffOp& a);

/* x^k D^(tensor d), k = 0..2d: coordinate basis of the degree-d global symbols */
std::vector<GradedSymbol> h0_tensor_basis(int d);

/* (-1)^d y^(2d) f(1/y): the same symbol read on the other chart; needs deg f <= 2d */
GradedSymbol symbol_chart_swap(const GradedSymbol& s);

/* global on both charts: polynomial coefficient with deg <= 2*degree */
bool is_global_symbol(const GradedSymbol& s);

}  // namespace pado
