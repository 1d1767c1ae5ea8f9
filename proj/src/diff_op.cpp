#include "pado/diff_op.hpp"

#include "pado/factorials.hpp"

namespace pado {

DiffOp DiffOp::operator+(const DiffOp& o) const {
    if (chart_ != o.chart_) throw std::invalid_argument("chart mismatch in +");
    DiffOp r = *this;
    for (const auto& [k, f] : o.terms_) r.add_term(k, f);
    return r;
}

DiffOp DiffOp::operator-(const DiffOp& o) const { return *this + (o * Rat(-1)); }

DiffOp DiffOp::operator*(const Rat& s) const {
    DiffOp r(chart_);
    if (s == 0) return r;
    for (const auto& [k, f] : terms_) r.terms_[k] = f * s;
    return r;
}

DiffOp compose(const DiffOp& a, const DiffOp& b) {
    if (a.chart() != b.chart()) throw std::invalid_argument("chart mismatch in compose");
    DiffOp r(a.chart());
    for (const auto& [k, f] : a.terms()) {
        for (const auto& [j, g] : b.terms()) {
            // D^k (g D^j) = sum_i binom(k,i) g^(i) D^(k-i+j)
            for (int i = 0; i <= k; ++i) {
                Poly gi = g.derivative(i);
                if (gi.is_zero()) continue;
                r.add_term(k - i + j, f * gi * Rat(binomial(k, i)));
            }
        }
    }
    return r;
}

DiffOp binomial_of_operator(const DiffOp& d, unsigned long nu) {
    DiffOp r = DiffOp::one(d.chart());
    for (unsigned long t = 0; t < nu; ++t) {
        DiffOp factor = d - DiffOp::one(d.chart()) * Rat(static_cast<long>(t));
        r = compose(r, factor);
    }
    return r * make_rat(Int(1), factorial(nu));
}

std::map<int, Laurent> chart_swap_laurent(const DiffOp& a) {
    // D_t^k expands on the other chart as (-s^2 D_s)^k, a polynomial-coefficient
    // operator; coordinate t = 1/s contributes Laurent parts.
    Chart target = other_chart(a.chart());
    int max_order = a.order() < 0 ? 0 : a.order();

    std::vector<DiffOp> dpow;  // (-s^2 D_s)^k in normal form
    dpow.reserve(static_cast<size_t>(max_order) + 1);
    dpow.push_back(DiffOp::one(target));
    DiffOp gen = DiffOp::term(target, 1, Poly::monomial(2, Rat(-1)));
    for (int k = 1; k <= max_order; ++k) dpow.push_back(compose(dpow.back(), gen));

    std::map<int, Laurent> out;
    auto add = [&out](int order, const Laurent& l) {
        auto it = out.find(order);
        if (it == out.end())
            out[order] = l;
        else
            it->second = it->second + l;
    };
    for (const auto& [k, f] : a.terms()) {
        Laurent frec = Laurent::reciprocal_arg(f);
        for (const auto& [j, g] : dpow[k].terms()) add(j, frec * Laurent(g));
    }
    for (auto it = out.begin(); it != out.end();) {
        if (it->second.is_zero())
            it = out.erase(it);
        else
            ++it;
    }
    return out;
}

std::optional<DiffOp> try_chart_swap(const DiffOp& a) {
    auto lmap = chart_swap_laurent(a);
    DiffOp r(other_chart(a.chart()));
    for (const auto& [k, l] : lmap) {
        if (!l.is_polynomial()) return std::nullopt;
        r.set_term(k, l.to_poly());
    }
    return r;
}

DiffOp chart_swap(const DiffOp& a) {
    auto r = try_chart_swap(a);
    if (!r) throw std::invalid_argument("operator not extendable to other chart");
    return *r;
}

bool is_global_section_level_m(const DiffOp& a, const LevelParams& lp) {
    if (a.chart() != Chart::X) throw std::invalid_argument("expected normal form on the x-chart");
    Int p = lp.pint();
    for (const auto& [k, f] : a.terms()) {
        // gamma_k = f * k!/q_k!
        Rat scale = make_rat(factorial(static_cast<unsigned long>(k)), qfactorial(static_cast<unsigned long>(k), lp));
        if (!all_p_integral(f * scale, p)) return false;
    }
    auto lmap = chart_swap_laurent(a);
    for (const auto& [k, l] : lmap) {
        if (!l.is_polynomial()) return false;
        Rat scale = make_rat(factorial(static_cast<unsigned long>(k)), qfactorial(static_cast<unsigned long>(k), lp));
        if (!all_p_integral(l.to_poly() * scale, p)) return false;
    }
    return true;
}

}  // namespace pado
