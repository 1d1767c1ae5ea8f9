#include "pado/theorems.hpp"

#include <set>
#include <stdexcept>

#include "pado/charts.hpp"
#include "pado/diff_op.hpp"
#include "pado/factorials.hpp"
#include "pado/lattice.hpp"
#include "pado/model_sections.hpp"
#include "pado/section_lattice.hpp"
#include "pado/symbol.hpp"
#include "pado/xi.hpp"

namespace pado {

long n_prime(long p, int n) {
    if (n < 0) throw std::invalid_argument("n must be >= 0");
    return (static_cast<long>(n) * (p - 1)) / (p + 1);
}

std::vector<Mono> reduced_family(int d) {
    if (d < 0) throw std::invalid_argument("degree must be >= 0");
    std::vector<Mono> out;
    unsigned du = static_cast<unsigned>(d);
    for (unsigned j = 0; j <= du; ++j) out.push_back(Mono{du - j, j, 0, 0});
    for (unsigned l = 1; l <= du; ++l) out.push_back(Mono{0, du - l, 0, l});
    return out;
}

Theorem1Report theorem1_graded_check(const LevelParams& lp, int max_degree) {
    if (max_degree < 1) throw std::invalid_argument("degree bound must be >= 1");

    Theorem1Report rep;
    rep.max_degree = max_degree;
    rep.torsion_exponent = torsion_bound(lp, max_degree).bound;
    rep.ok = true;

    for (int d = 0; d <= max_degree; ++d) {
        Theorem1Degree row;
        row.d = d;

        std::vector<Mono> fam = reduced_family(d);
        std::set<int> seen;
        row.injective = fam.size() == static_cast<size_t>(2 * d + 1);
        row.realizes = true;
        for (const Mono& nu : fam) {
            GradedSymbol s = level_symbol(nu, lp);
            row.injective = row.injective && !s.is_zero() && seen.insert(symbol_x_exponent(nu)).second;
            DiffOp op = realize_element(level_basis_element(nu, lp));
            row.realizes = row.realizes && !op.is_zero() && op.order() == d && symbol_of(op) == s;
        }
        row.injective = row.injective && seen.size() == static_cast<size_t>(2 * d + 1) &&
                        *seen.begin() == 0 && *seen.rbegin() == 2 * d;

        /* degree-d image lattice, assembled independently of the fiber formula */
        PLocalBasis image(lp.p, 2 * d + 1);
        for (const Mono& nu : monos_of_weight(static_cast<unsigned>(d))) {
            std::vector<Rat> rowv(static_cast<size_t>(2 * d + 1), Rat(0));
            rowv[static_cast<size_t>(symbol_x_exponent(nu))] = coordinate_value(nu, lp);
            image.add(rowv);
        }
        row.exponents_agree = true;
        row.cosurjective = true;
        for (int k = 0; k <= 2 * d; ++k) {
            std::vector<Rat> unit(static_cast<size_t>(2 * d + 1), Rat(0));
            unit[static_cast<size_t>(k)] = Rat(1);
            long elim = image.least_power(unit);
            long fiber = symbol_exponent(d, k, lp);
            row.exponents_agree = row.exponents_agree && elim == fiber;
            row.cosurjective = row.cosurjective && fiber <= rep.torsion_exponent;
            if (fiber > row.max_exponent) row.max_exponent = fiber;
        }

        rep.ok = rep.ok && row.injective && row.realizes && row.exponents_agree && row.cosurjective;
        rep.degrees.push_back(row);
    }
    return rep;
}

CalcCheck calc_identity_check(unsigned long nu, const Int& center, const LevelParams& lp) {
    CalcCheck c;
    c.nu = nu;
    c.center = center;

    Rat a(center);
    Rat pn(lp.pn());
    Poly xma = Poly::variable() - Poly(a);

    DiffOp lhs = DiffOp::term(
        Chart::X, static_cast<int>(nu),
        Poly::monomial(static_cast<int>(nu), dp_coeff(nu, lp).value * pow_rat(pn, static_cast<long>(nu))));

    DiffOp rhs(Chart::X);
    c.ratios_integral = true;
    for (unsigned long k = 0; k <= nu; ++k) {
        Rat ratio = qbinomial_ratio(nu, k, lp);
        c.ratios_integral = c.ratios_integral && ratio.get_den() == 1;
        DiffOp left = DiffOp::term(Chart::X, static_cast<int>(k),
                                   xma.pow(k) * dp_coeff(k, lp).value);
        DiffOp right = DiffOp::term(Chart::X, static_cast<int>(nu - k),
                                    Poly(dp_coeff(nu - k, lp).value * pow_rat(pn, static_cast<long>(nu - k))));
        Rat outer = ratio * pow_rat(pn, static_cast<long>(k)) * pow_rat(a, static_cast<long>(nu - k));
        rhs += compose(left, right) * outer;
    }
    c.exact = lhs == rhs;
    return c;
}

namespace {

/* finite transform centers of the level-n covering, interior excluded */
std::set<Int> finite_centers(long p, int n) {
    std::set<Int> out;
    for (const ChartAddress& c : enumerate_charts(p, static_cast<unsigned>(n)))
        if (c.kind != ChartKind::Interior && c.address.at(0) != kInf)
            out.insert(transform_of(c, p, static_cast<unsigned>(n)).center);
    return out;
}

}  // namespace

Theorem2Report theorem2_check(const LevelParams& lp, int max_degree) {
    if (max_degree < 1) throw std::invalid_argument("degree bound must be >= 1");

    Theorem2Report rep;
    rep.max_degree = max_degree;
    rep.nprime = n_prime(lp.p, lp.n);
    rep.torsion_exponent = torsion_bound(lp, max_degree).bound;

    rep.left_ok = true;
    for (unsigned w = 0; w <= static_cast<unsigned>(max_degree); ++w)
        for (const Mono& nu : monos_of_weight(w)) {
            DiffOp op = realize_element(scaled_level_basis_element(nu, lp));
            ++rep.generators_checked;
            if (!is_model_section_level_m(op, lp)) {
                rep.left_ok = false;
                if (!rep.first_bad_generator) rep.first_bad_generator = nu;
            }
        }

    rep.calc_ok = true;
    rep.ratios_ok = true;
    for (unsigned long nu = 0; nu <= static_cast<unsigned long>(max_degree); ++nu)
        for (const Int& a : finite_centers(lp.p, lp.n)) {
            CalcCheck cc = calc_identity_check(nu, a, lp);
            rep.calc_ok = rep.calc_ok && cc.exact;
            rep.ratios_ok = rep.ratios_ok && cc.ratios_integral;
            rep.calc.push_back(cc);
        }

    rep.right_ok = true;
    for (int d = 1; d <= max_degree; ++d) {
        Theorem2Degree row;
        row.d = d;
        long n = lp.n;
        long p = lp.p;
        row.c = (static_cast<long>(d) * (p - 1) + p) / (p + 1);
        /* n c (p+1) >= n d (p-1) and n d (p-1) >= d n' (p+1), all in Z */
        row.chain_ok = n * row.c * (p + 1) >= n * d * (p - 1) &&
                       n * d * (p - 1) >= d * rep.nprime * (p + 1);

        SectionLattice L = global_section_lattice(p, static_cast<unsigned>(n), d);
        row.lattice_ok = true;
        for (const ZRow& r : L.basis.rows)
            for (int k = 0; k <= 2 * d; ++k) {
                const Int& entry = r.at(static_cast<size_t>(k));
                if (entry == 0) continue;
                long need = static_cast<long>(d) * rep.nprime + symbol_exponent(d, k, lp);
                if (!(vp(entry, lp.pint()) >= need - rep.torsion_exponent))
                    row.lattice_ok = false;
            }

        rep.right_ok = rep.right_ok && row.chain_ok && row.lattice_ok;
        rep.degrees.push_back(row);
    }

    rep.ok = rep.left_ok && rep.calc_ok && rep.ratios_ok && rep.right_ok;
    return rep;
}

}  // namespace pado
