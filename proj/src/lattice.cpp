#include "pado/lattice.hpp"

#include <stdexcept>

namespace pado {

ZMat identity_mat(int n) {
    ZMat m(n);
    m.rows.assign(n, ZRow(n, 0));
    for (int i = 0; i < n; ++i) m.rows[i][i] = 1;
    return m;
}

namespace {

Int fdiv(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

void row_axpy(ZRow& dst, const Int& c, const ZRow& src) {
    for (size_t j = 0; j < dst.size(); ++j) dst[j] += c * src[j];
}

}  // namespace

ZMat hnf(const ZMat& a) {
    ZMat m = a;
    for (const ZRow& r : m.rows)
        if (static_cast<int>(r.size()) != m.cols) throw std::invalid_argument("ragged ZMat");
    size_t r = 0;
    for (int c = 0; c < m.cols && r < m.rows.size(); ++c) {
        // Euclid below row r until a single nonzero entry remains in column c
        while (true) {
            size_t best = m.rows.size();
            for (size_t i = r; i < m.rows.size(); ++i) {
                if (m.rows[i][c] == 0) continue;
                if (best == m.rows.size() || cmp(abs(m.rows[i][c]), abs(m.rows[best][c])) < 0) best = i;
            }
            if (best == m.rows.size()) break;  // column is zero below r
            std::swap(m.rows[r], m.rows[best]);
            bool cleared = true;
            for (size_t i = r + 1; i < m.rows.size(); ++i) {
                if (m.rows[i][c] == 0) continue;
                Int q = fdiv(m.rows[i][c], m.rows[r][c]);
                row_axpy(m.rows[i], -q, m.rows[r]);
                if (m.rows[i][c] != 0) cleared = false;
            }
            if (cleared) break;
        }
        if (r < m.rows.size() && m.rows[r][c] != 0) {
            if (m.rows[r][c] < 0)
                for (Int& x : m.rows[r]) x = -x;
            for (size_t i = 0; i < r; ++i) {
                Int q = fdiv(m.rows[i][c], m.rows[r][c]);
                row_axpy(m.rows[i], -q, m.rows[r]);
            }
            ++r;
        }
    }
    m.rows.resize(r);
    return m;
}

bool lattice_member(const ZMat& h, const ZRow& v) {
    if (static_cast<int>(v.size()) != h.cols) throw std::invalid_argument("size mismatch");
    ZRow w = v;
    size_t row = 0;
    for (int c = 0; c < h.cols; ++c) {
        bool pivot_here = row < h.rows.size() && h.rows[row][c] != 0;
        if (w[c] == 0) {
            if (pivot_here) ++row;
            continue;
        }
        if (!pivot_here) return false;
        Int q = w[c] / h.rows[row][c];
        if (q * h.rows[row][c] != w[c]) return false;
        row_axpy(w, -q, h.rows[row]);
        ++row;
    }
    for (const Int& x : w)
        if (x != 0) return false;
    return true;
}

bool lattice_subset(const ZMat& a, const ZMat& b) {
    ZMat hb = hnf(b);
    for (const ZRow& r : a.rows)
        if (!lattice_member(hb, r)) return false;
    return true;
}

ZMat int_kernel(const ZMat& a) {
    const int n = static_cast<int>(a.rows.size());
    ZMat aug(a.cols + n);
    for (int i = 0; i < n; ++i) {
        ZRow r = a.rows[i];
        r.resize(a.cols + n, 0);
        r[a.cols + i] = 1;
        aug.rows.push_back(std::move(r));
    }
    ZMat h = hnf(aug);
    ZMat ker(n);
    for (const ZRow& r : h.rows) {
        bool zero_head = true;
        for (int c = 0; c < a.cols; ++c)
            if (r[c] != 0) {
                zero_head = false;
                break;
            }
        if (zero_head) ker.rows.push_back(ZRow(r.begin() + a.cols, r.end()));
    }
    return ker;
}

ZMat lattice_intersect(const ZMat& a, const ZMat& b) {
    if (a.cols != b.cols) throw std::invalid_argument("column mismatch");
    ZMat stacked(a.cols);
    stacked.rows = a.rows;
    stacked.rows.insert(stacked.rows.end(), b.rows.begin(), b.rows.end());
    ZMat ker = int_kernel(stacked);
    ZMat meet(a.cols);
    for (const ZRow& k : ker.rows) {
        ZRow v(a.cols, 0);
        for (size_t i = 0; i < a.rows.size(); ++i) row_axpy(v, k[i], a.rows[i]);
        meet.rows.push_back(std::move(v));
    }
    return hnf(meet);
}

ZMat lattice_scale(const ZMat& a, const Int& s) {
    ZMat m = a;
    for (ZRow& r : m.rows)
        for (Int& x : r) x *= s;
    return m;
}

void PLocalBasis::add(const std::vector<Rat>& v) {
    if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("size mismatch");
    gens_.push_back(v);
    dirty_ = true;
}

/*
 * Forward echelon with valuation pivoting: per column, the not-yet-placed
 * row with minimal vp at that column becomes the pivot row and clears the
 * column below itself (quotients are p-integral by minimality). Rows above
 * are never touched, so pivots ascend and one forward pass reduces any
 * vector with uniquely determined coefficients.
 */
void PLocalBasis::refresh() const {
    if (!dirty_) return;
    dirty_ = false;
    rows_.clear();
    const int n = static_cast<int>(gens_.size());
    std::vector<Row> work(n);
    for (int i = 0; i < n; ++i) {
        work[i].vec = gens_[i];
        work[i].pre.assign(n, Rat(0));
        work[i].pre[i] = 1;
        work[i].pivot = -1;
    }
    size_t placed = 0;
    for (int c = 0; c < cols_ && placed < work.size(); ++c) {
        size_t best = work.size();
        long bestval = 0;
        for (size_t i = placed; i < work.size(); ++i) {
            if (work[i].vec[c] == 0) continue;
            long val = vp(work[i].vec[c], p_).value;
            if (best == work.size() || val < bestval) {
                best = i;
                bestval = val;
            }
        }
        if (best == work.size()) continue;
        std::swap(work[placed], work[best]);
        work[placed].pivot = c;
        for (size_t i = placed + 1; i < work.size(); ++i) {
            if (work[i].vec[c] == 0) continue;
            Rat f = work[i].vec[c] / work[placed].vec[c];
            for (int j = 0; j < cols_; ++j) work[i].vec[j] -= f * work[placed].vec[j];
            for (int j = 0; j < n; ++j) work[i].pre[j] -= f * work[placed].pre[j];
        }
        ++placed;
    }
    rows_.assign(work.begin(), work.begin() + placed);
}

int PLocalBasis::rank() const {
    refresh();
    return static_cast<int>(rows_.size());
}

long PLocalBasis::least_power(const std::vector<Rat>& v, std::vector<Rat>* pre) const {
    if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("size mismatch");
    refresh();
    std::vector<Rat> w = v;
    std::vector<Rat> coeff(rows_.size(), Rat(0));
    for (size_t i = 0; i < rows_.size(); ++i) {
        const Row& r = rows_[i];
        if (w[r.pivot] == 0) continue;
        Rat c = w[r.pivot] / r.vec[r.pivot];
        for (int j = 0; j < cols_; ++j) w[j] -= c * r.vec[j];
        coeff[i] = c;
    }
    for (const Rat& x : w)
        if (x != 0) return -1;
    long need = 0;
    for (const Rat& c : coeff) {
        if (c == 0) continue;
        long val = vp(c, p_).value;
        if (-val > need) need = -val;
    }
    if (pre) {
        pre->assign(gens_.size(), Rat(0));
        Rat scale = pow_rat(Rat(p_), need);
        for (size_t i = 0; i < rows_.size(); ++i) {
            if (coeff[i] == 0) continue;
            for (size_t j = 0; j < gens_.size(); ++j) (*pre)[j] += scale * coeff[i] * rows_[i].pre[j];
        }
    }
    return need;
}

}  // namespace pado
