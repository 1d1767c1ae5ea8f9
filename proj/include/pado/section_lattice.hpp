#pragma once

#include "pado/lattice.hpp"
#include "pado/levels.hpp"
#include "pado/poly.hpp"
#include "pado/symbol.hpp"

namespace pado {

/*
 * Lattice of degree-d symbol coefficients (length 2d+1, basis 1..x^(2d))
 * that extend to the n-th model: the intersection over all centers of the
 * local stalks on the x side and, after the degree-2d sign reversal, on the
 * y side. basis is the canonical HNF. The level-m structure only rescales
 * the whole lattice by q_d!/d!, recorded separately by level_scale().
 */
struct SectionLattice {
    long p = 2;
    unsigned n = 0;
    int d = 0;
    ZMat basis;
};

SectionLattice global_section_lattice(long p, unsigned n, int d);

/* q_d!/d!: scalar between the level-m lattice and the level-0 one */
Rat level_scale(int d, const LevelParams& lp);

/* row vector of a symbol coefficient; needs deg <= 2d and integer entries */
ZRow symbol_row(const Poly& f, int d);
Poly row_poly(const ZRow& r);

bool lattice_contains_symbol(const SectionLattice& l, const Poly& f);

/* min vp over the HNF entries: the scale of the lattice against x^k generators */
long optimal_exponent(const SectionLattice& l);

/*
 * Two-sided bound: p^(nd) L0 inside L inside p^(nc) L0 with
 * c = ceil(d(p-1)/(p+1)) and L0 the full degree-d coefficient lattice.
 */
struct SandwichReport {
    bool lower_ok = false;
    bool upper_ok = false;
    long c = 0;
    long exponent = 0;
};

SandwichReport sandwich_check(const SectionLattice& l);

}  // namespace pado
