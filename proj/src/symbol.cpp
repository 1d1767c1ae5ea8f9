#include "pado/symbol.hpp"

namespace pado {

GradedSymbol operator*(const GradedSymbol& a, const GradedSymbol& b) {
    return GradedSymbol(a.degree + b.degree, a.coeff * b.coeff);
}

GradedSymbol operator*(const GradedSymbol& a, const Rat& s) {
    return GradedSymbol(a.degree, a.coeff * s);
}

GradedSymbol operator+(const GradedSymbol& a, const GradedSymbol& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.degree != b.degree) throw std::invalid_argument("symbol degree mismatch in +");
    return GradedSymbol(a.degree, a.coeff + b.coeff);
}

GradedSymbol symbol_of(const DiffOp& a) {
    if (a.is_zero()) throw std::invalid_argument("zero operator has no principal symbol");
    int d = a.order();
    return GradedSymbol(d, a.coeff(d));
}

std::vector<GradedSymbol> h0_tensor_basis(int d) {
    std::vector<GradedSymbol> basis;
    basis.reserve(static_cast<size_t>(2 * d) + 1);
    for (int k = 0; k <= 2 * d; ++k) basis.emplace_back(d, Poly::monomial(k, Rat(1)));
    return basis;
}

GradedSymbol symbol_chart_swap(const GradedSymbol& s) {
    if (s.coeff.degree() > 2 * s.degree)
        throw std::invalid_argument("symbol coefficient degree exceeds 2d; not global");
    Rat sign = (s.degree % 2 == 0) ? Rat(1) : Rat(-1);
    return GradedSymbol(s.degree, reversed(s.coeff, 2 * s.degree) * sign);
}

bool is_global_symbol(const GradedSymbol& s) { return s.coeff.degree() <= 2 * s.degree; }

}  // namespace pado
