#pragma once

#include <utility>
#include <vector>

#include "pado/symbol.hpp"

namespace pado {

enum class ChartKind { Interior, BlowUp, Disc };

/* first address entry standing for the point at infinity */
inline constexpr int kInf = -1;

/*
 * One open set of the standard covering of the n-th blow-up model:
 * the interior of the base, the blow-up charts at levels 1..n (address
 * length = level), and the residual discs at the bottom (address length
 * n+1). Address entries are digits 0..p-1, except the first which may
 * be kInf for the family living on the y-chart.
 */
struct ChartAddress {
    ChartKind kind = ChartKind::Interior;
    unsigned level = 0;
    std::vector<int> address;

    bool operator==(const ChartAddress& o) const {
        return kind == o.kind && level == o.level && address == o.address;
    }
};

/* full covering; counts are 1 + sum_nu (p+1)p^(nu-1) + (p+1)p^n */
std::vector<ChartAddress> enumerate_charts(long p, unsigned n);

/*
 * Affine data of a chart's coordinate: x = center + p^scale * t on the
 * x-chart, or the same with y when the address starts at infinity.
 * scale is level-1 for blow-up charts and n for discs.
 */
struct ChartTransform {
    bool infinite_family = false;
    Int center = 0;
    unsigned scale = 0;
};

ChartTransform transform_of(const ChartAddress& c, long p, unsigned n);

/*
 * Pullback of the degree-d symbol f(x) Dx^(d): substitutes
 * x = center + p^scale t and Dx^(d) = p^(-scale*d) Dt^(d).
 * The caller is responsible for handing a symbol written in the same
 * affine chart the transform lives on.
 */
GradedSymbol to_chart(const GradedSymbol& s, const ChartTransform& t, long p);

/*
 * Intersection tree of the special-fiber components: the strict transform
 * of the base plus one component per blow-up chart. vertices[0] is the
 * base; every vertex has degree p+1 except the level-n ends.
 */
struct ComponentTree {
    std::vector<ChartAddress> vertices;
    std::vector<std::pair<int, int>> edges;
};

ComponentTree component_tree(long p, unsigned n);

/*
 * True iff the symbol extends to the whole model: the pullback to every
 * residual disc is p-integral, with the infinity family checked through
 * the y-chart form (-1)^d y^(2d) f(1/y). Needs deg f <= 2d and p-integral
 * input coefficients.
 */
bool extension_test(const GradedSymbol& s, long p, unsigned n);

}  // namespace pado
