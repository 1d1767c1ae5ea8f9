#pragma once

#include <map>
#include <optional>
#include <string>

#include "pado/laurent.hpp"
#include "pado/levels.hpp"
#include "pado/poly.hpp"

namespace pado {

enum class Chart { X, Y };

inline Chart other_chart(Chart c) { return c == Chart::X ? Chart::Y : Chart::X; }
inline std::string chart_var(Chart c) { return c == Chart::X ? "x" : "y"; }

/*
 * Differential operator in normal form sum_k f_k(t) D_t^k on one affine chart
 * of the projective line; t is x or y with x*y = 1.
 */
class DiffOp {
public:
    explicit DiffOp(Chart chart = Chart::X) : chart_(chart) {}

    static DiffOp zero(Chart chart) { return DiffOp(chart); }
    static DiffOp one(Chart chart) { return term(chart, 0, Poly(Rat(1))); }
    static DiffOp term(Chart chart, int order, const Poly& coeff) {
        DiffOp a(chart);
        a.set_term(order, coeff);
        return a;
    }
    /* D_t^k */
    static DiffOp d(Chart chart, int k = 1) { return term(chart, k, Poly(Rat(1))); }
    /* t^j */
    static DiffOp coord(Chart chart, int j = 1) { return term(chart, 0, Poly::monomial(j, Rat(1))); }

    Chart chart() const { return chart_; }
    bool is_zero() const { return terms_.empty(); }
    /* order of the zero operator is the sentinel -1 */
    int order() const { return terms_.empty() ? -1 : terms_.rbegin()->first; }

    const std::map<int, Poly>& terms() const { return terms_; }
    Poly coeff(int order) const {
        auto it = terms_.find(order);
        return it == terms_.end() ? Poly() : it->second;
    }
    void set_term(int order, const Poly& f) {
        if (order < 0) throw std::invalid_argument("negative operator order");
        if (f.is_zero())
            terms_.erase(order);
        else
            terms_[order] = f;
    }
    void add_term(int order, const Poly& f) { set_term(order, coeff(order) + f); }

    DiffOp operator+(const DiffOp& o) const;
    DiffOp operator-(const DiffOp& o) const;
    DiffOp operator*(const Rat& s) const;
    DiffOp operator-() const { return *this * Rat(-1); }
    DiffOp& operator+=(const DiffOp& o) { return *this = *this + o; }
    DiffOp& operator-=(const DiffOp& o) { return *this = *this - o; }
    bool operator==(const DiffOp& o) const { return chart_ == o.chart_ && terms_ == o.terms_; }

private:
    Chart chart_;
    std::map<int, Poly> terms_;  // order -> coefficient polynomial
};

inline DiffOp operator*(const Rat& s, const DiffOp& a) { return a * s; }

/* Composition A o B via the Leibniz rule; exact normal form. */
DiffOp compose(const DiffOp& a, const DiffOp& b);

/* D(D-1)...(D-nu+1)/nu! */
DiffOp binomial_of_operator(const DiffOp& d, unsigned long nu);

/*
 * Coordinate change x = 1/y (equivalently y = 1/x): D_x = -y^2 D_y.
 * Coefficients on the target chart are Laurent polynomials in general.
 */
std::map<int, Laurent> chart_swap_laurent(const DiffOp& a);

/* Swap when the result is polynomial; nullopt means "not extendable to the other chart". */
std::optional<DiffOp> try_chart_swap(const DiffOp& a);
DiffOp chart_swap(const DiffOp& a);  // throws on non-polynomial result

/*
 * Level-m global integrality: A = sum_nu gamma_nu(x) (q_nu!/nu!) D^nu with
 * gamma_nu p-integral, and the chart swap admits the same shape in y.
 */
bool is_global_section_level_m(const DiffOp& a, const LevelParams& lp);

}  // namespace pado
