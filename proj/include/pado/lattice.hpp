#pragma once

#include <vector>

#include "pado/rational.hpp"

namespace pado {

using ZRow = std::vector<Int>;

/* Row-generated sublattice of Z^cols; rows need not be independent. */
struct ZMat {
    int cols = 0;
    std::vector<ZRow> rows;

    ZMat() = default;
    explicit ZMat(int c) : cols(c) {}

    bool operator==(const ZMat& o) const { return cols == o.cols && rows == o.rows; }
};

ZMat identity_mat(int n);

/*
 * Canonical row Hermite normal form: echelon shape, positive pivots, entries
 * above a pivot reduced into [0, pivot), zero rows dropped. Two generating
 * sets span the same lattice iff their forms are identical.
 */
ZMat hnf(const ZMat& a);

/* v in the row span; h must be in HNF. */
bool lattice_member(const ZMat& h, const ZRow& v);

/* span(a) subseteq span(b); both arbitrary generating sets */
bool lattice_subset(const ZMat& a, const ZMat& b);

/* intersection of the two row spans, in HNF */
ZMat lattice_intersect(const ZMat& a, const ZMat& b);

ZMat lattice_scale(const ZMat& a, const Int& s);

/* basis of { x : x * a = 0 }, rows of length a.rows.size() */
ZMat int_kernel(const ZMat& a);

/*
 * Span over the local ring Z_(p) (denominators prime to p allowed) of a list
 * of rational generator vectors. Internally kept as a forward-echelon basis
 * with valuation pivoting; every echelon row remembers its coordinates over
 * the original generators, so reductions yield exact preimages.
 */
class PLocalBasis {
public:
    PLocalBasis(long p, int cols) : p_(p), cols_(cols) {}

    /* append a generator; its index in insertion order is its tag */
    void add(const std::vector<Rat>& v);

    int generators() const { return static_cast<int>(gens_.size()); }
    int rank() const;

    /*
     * Least e >= 0 with p^e v in the span; -1 if no power of p works.
     * With `pre` non-null and e >= 0, *pre receives coordinates over the
     * original generators with p^e v = sum_i (*pre)[i] * gen_i exactly.
     */
    long least_power(const std::vector<Rat>& v, std::vector<Rat>* pre = nullptr) const;

    bool contains(const std::vector<Rat>& v) const { return least_power(v) == 0; }

private:
    struct Row {
        std::vector<Rat> vec;
        std::vector<Rat> pre;  // coordinates over generators, in insertion order
        int pivot;
    };

    void refresh() const;

    long p_;
    int cols_;
    std::vector<std::vector<Rat>> gens_;
    mutable std::vector<Row> rows_;
    mutable bool dirty_ = false;
};

}  // namespace pado
