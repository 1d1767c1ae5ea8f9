#include "pado/charts.hpp"

#include <map>
#include <stdexcept>

namespace pado {

namespace {

/* all digit strings of length len whose first entry may be kInf */
void push_addresses(std::vector<ChartAddress>& out, ChartKind kind, unsigned level, long p,
                    unsigned len) {
    std::vector<int> a(len, 0);
    a[0] = kInf;
    while (true) {
        out.push_back(ChartAddress{kind, level, a});
        unsigned i = len;
        while (i > 0) {
            --i;
            int ceiling = static_cast<int>(p) - 1;
            if (a[i] < ceiling) {
                ++a[i];
                break;
            }
            a[i] = (i == 0) ? kInf : 0;
            if (i == 0) return;
        }
    }
}

}  // namespace

std::vector<ChartAddress> enumerate_charts(long p, unsigned n) {
    require_prime(Int(p));
    std::vector<ChartAddress> out;
    out.push_back(ChartAddress{});
    for (unsigned nu = 1; nu <= n; ++nu) push_addresses(out, ChartKind::BlowUp, nu, p, nu);
    push_addresses(out, ChartKind::Disc, n, p, n + 1);
    return out;
}

ChartTransform transform_of(const ChartAddress& c, long p, unsigned n) {
    ChartTransform t;
    if (c.kind == ChartKind::Interior) return t;
    unsigned len = (c.kind == ChartKind::Disc) ? n + 1 : c.level;
    if (c.address.size() != len) throw std::invalid_argument("chart address has wrong length");
    t.infinite_family = (c.address[0] == kInf);
    for (unsigned i = 0; i < len; ++i) {
        int digit = c.address[i];
        if (i == 0 && t.infinite_family) continue;
        if (digit < 0 || digit >= p) throw std::invalid_argument("chart digit out of range");
        t.center += Int(digit) * pow_int(Int(p), i);
    }
    t.scale = len - 1;
    return t;
}

GradedSymbol to_chart(const GradedSymbol& s, const ChartTransform& t, long p) {
    Int ps = pow_int(Int(p), t.scale);
    Poly f = scale_arg(taylor_shift(s.coeff, Rat(t.center)), Rat(ps));
    Rat unscale = pow_rat(Rat(ps), -s.degree);
    return GradedSymbol(s.degree, f * unscale);
}

ComponentTree component_tree(long p, unsigned n) {
    require_prime(Int(p));
    ComponentTree tree;
    tree.vertices.push_back(ChartAddress{});
    std::map<std::vector<int>, int> index;
    for (unsigned nu = 1; nu <= n; ++nu) {
        std::vector<ChartAddress> level;
        push_addresses(level, ChartKind::BlowUp, nu, p, nu);
        for (auto& v : level) {
            int parent = 0;
            if (nu > 1) {
                std::vector<int> prefix(v.address.begin(), v.address.end() - 1);
                parent = index.at(prefix);
            }
            tree.vertices.push_back(v);
            int child = static_cast<int>(tree.vertices.size()) - 1;
            index[v.address] = child;
            tree.edges.emplace_back(parent, child);
        }
    }
    return tree;
}

bool extension_test(const GradedSymbol& s, long p, unsigned n) {
    require_prime(Int(p));
    const Poly& f = s.coeff;
    int d = s.degree;
    if (d < 0) throw std::invalid_argument("negative symbol degree");
    if (min_vp(f, Int(p)) < 0) return false;
    if (f.degree() > 2 * d) return false;

    long need = static_cast<long>(n) * d;
    Int pn = pow_int(Int(p), n);

    Int finite_count = pow_int(Int(p), n + 1);
    for (Int a = 0; a < finite_count; ++a) {
        Poly local = scale_arg(taylor_shift(f, Rat(a)), Rat(pn));
        if (min_vp(local, Int(p)) < need) return false;
    }

    Poly g = symbol_chart_swap(s).coeff;
    for (Int c = 0; c < pn; ++c) {
        Poly local = scale_arg(taylor_shift(g, Rat(Int(p) * c)), Rat(pn));
        if (min_vp(local, Int(p)) < need) return false;
    }
    return true;
}

}  // namespace pado
