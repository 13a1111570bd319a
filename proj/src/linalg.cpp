#include "z2r/linalg.hpp"

#include <algorithm>
#include <limits>

#include "z2r/errors.hpp"

namespace z2r {

MixedMatrix::MixedMatrix(Shape shape, std::vector<MixedVector> rows) : shape_(shape), rows_(std::move(rows)) {
    for (const auto& r : rows_)
        if (r.shape() != shape_) throw ShapeMismatch("MixedMatrix: row shape differs from matrix shape");
}

void MixedMatrix::push_back(MixedVector v) {
    if (v.shape() != shape_) throw ShapeMismatch("MixedMatrix::push_back: row shape differs from matrix shape");
    rows_.push_back(std::move(v));
}

RMatrix RMatrix::identity(std::size_t n) {
    RMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = RingElem::one();
    return m;
}

bool RMatrix::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](RingElem e) { return e == RingElem::zero(); });
}

RMatrix operator*(const RMatrix& a, const RMatrix& b) {
    if (a.n_ != b.n_) throw ShapeMismatch("RMatrix product: size mismatch");
    RMatrix c(a.n_);
    for (std::size_t i = 0; i < a.n_; ++i)
        for (std::size_t j = 0; j < a.n_; ++j) {
            RingElem acc;
            for (std::size_t l = 0; l < a.n_; ++l) acc += a(i, l) * b(l, j);
            c(i, j) = acc;
        }
    return c;
}

BinaryMatrix::BinaryMatrix(std::size_t cols, std::vector<BitVec> rows) : cols_(cols), rows_(std::move(rows)) {
    for (const auto& r : rows_)
        if (r.size() != cols_) throw ShapeMismatch("BinaryMatrix: ragged rows");
}

void BinaryMatrix::push_back(BitVec v) {
    if (v.size() != cols_) throw ShapeMismatch("BinaryMatrix::push_back: row length differs");
    rows_.push_back(std::move(v));
}

BinaryMatrix BinaryMatrix::identity(std::size_t n) {
    BinaryMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

BinaryMatrix BinaryMatrix::transpose() const {
    BinaryMatrix t(cols_, rows_.size());
    for (std::size_t i = 0; i < rows_.size(); ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (rows_[i].get(j)) t.set(j, i, true);
    return t;
}

BinaryMatrix operator*(const BinaryMatrix& a, const BinaryMatrix& b) {
    if (a.cols() != b.rows()) throw ShapeMismatch("BinaryMatrix product: inner dimensions differ");
    BinaryMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t l = 0; l < a.cols(); ++l)
            if (a.get(i, l)) c.row(i) ^= b.row(l);
    return c;
}

RMatrix gram(const MixedMatrix& g) {
    const std::size_t k = g.rows();
    RMatrix m(k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i; j < k; ++j) m(i, j) = m(j, i) = inner_product(g.row(i), g.row(j));
    return m;
}

RMatrix plain_product_gram(const MixedMatrix& g) {
    const std::size_t k = g.rows();
    RMatrix m(k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            RingElem acc;
            if (BitVec::dot(g.row(i).bin_plane(), g.row(j).bin_plane())) acc += RingElem::one();
            for (std::size_t c = 0; c < g.shape().beta; ++c) acc += g.row(i).ring(c) * g.row(j).ring(c);
            m(i, j) = acc;
        }
    return m;
}

BinaryMatrix theta(const RMatrix& m) {
    BinaryMatrix b(m.size(), m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j) b.set(i, j, theta(m(i, j)));
    return b;
}

bool r_invertible(const RMatrix& m) { return f2_invertible(theta(m)); }

std::size_t f2_rank(const BinaryMatrix& m) { return binary_row_reduce(m).rank(); }

bool f2_invertible(const BinaryMatrix& m) { return m.rows() == m.cols() && f2_rank(m) == m.rows(); }

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

std::vector<std::size_t> pivots_then_rest(const std::vector<std::size_t>& pivots, std::size_t n) {
    std::vector<std::size_t> perm = pivots;
    std::vector<bool> taken(n, false);
    for (auto c : pivots) taken[c] = true;
    for (std::size_t c = 0; c < n; ++c)
        if (!taken[c]) perm.push_back(c);
    return perm;
}

}  // namespace

StandardForm standard_form(const MixedMatrix& g) {
    const Shape sh = g.shape();
    std::vector<MixedVector> work = g.row_list();
    std::vector<bool> used(work.size(), false);

    auto first_free = [&](auto pred) {
        for (std::size_t r = 0; r < work.size(); ++r)
            if (!used[r] && pred(work[r])) return r;
        return kNone;
    };

    // k1: unit pivots in the R block
    std::vector<std::size_t> k1_rows, k1_cols;
    std::vector<bool> is_k1_col(sh.beta, false);
    for (std::size_t c = 0; c < sh.beta; ++c) {
        const std::size_t p = first_free([c](const MixedVector& v) { return is_unit(v.ring(c)); });
        if (p == kNone) continue;
        used[p] = true;
        // units of R are their own inverses
        if (const RingElem lead = work[p].ring(c); lead != RingElem::one()) work[p] = scalar_mul(lead, work[p]);
        for (std::size_t r = 0; r < work.size(); ++r) {
            const RingElem e = work[r].ring(c);
            if (r != p && e != RingElem::zero()) work[r] += scalar_mul(e, work[p]);
        }
        k1_rows.push_back(p);
        k1_cols.push_back(c);
        is_k1_col[c] = true;
    }

    // k0: binary pivots among the rest, whose R parts now lie in {0,u}
    std::vector<std::size_t> k0_rows, k0_cols;
    for (std::size_t c = 0; c < sh.alpha; ++c) {
        const std::size_t p = first_free([c](const MixedVector& v) { return v.bin(c); });
        if (p == kNone) continue;
        used[p] = true;
        for (std::size_t r = 0; r < work.size(); ++r)
            if (r != p && work[r].bin(c)) work[r] += work[p];
        k0_rows.push_back(p);
        k0_cols.push_back(c);
    }

    // k2: u pivots among the rest, whose binary parts are now zero
    std::vector<std::size_t> k2_rows, k2_cols;
    for (std::size_t c = 0; c < sh.beta; ++c) {
        if (is_k1_col[c]) continue;
        const std::size_t p = first_free([c](const MixedVector& v) { return v.ring(c).t(); });
        if (p == kNone) continue;
        used[p] = true;
        for (std::size_t r = 0; r < work.size(); ++r)
            if (r != p && work[r].ring(c).t()) work[r] += work[p];
        k2_rows.push_back(p);
        k2_cols.push_back(c);
    }

    std::vector<std::size_t> ring_pivots = k1_cols;
    ring_pivots.insert(ring_pivots.end(), k2_cols.begin(), k2_cols.end());

    StandardForm sf;
    sf.binary_perm = pivots_then_rest(k0_cols, sh.alpha);
    sf.ring_perm = pivots_then_rest(ring_pivots, sh.beta);
    sf.type = CodeType{sh.alpha, sh.beta, k0_rows.size(), k1_rows.size(), k2_rows.size()};
    sf.matrix = MixedMatrix(sh);
    for (const auto* group : {&k0_rows, &k1_rows, &k2_rows})
        for (auto r : *group) sf.matrix.push_back(permute_columns(work[r], sf.binary_perm, sf.ring_perm));
    return sf;
}

MixedMatrix dual_generator(const StandardForm& sf) {
    const Shape sh = sf.matrix.shape();
    const auto [alpha, beta, k0, k1, k2] = sf.type;
    const std::size_t rest = beta - k1 - k2;
    const auto& m = sf.matrix;

    // block accessors on the permuted standard-form matrix
    auto a1 = [&](std::size_t i, std::size_t j) { return m.row(i).bin(k0 + j); };
    auto p = [&](std::size_t i, std::size_t j) { return m.row(i).ring(k1 + k2 + j).t(); };
    auto s = [&](std::size_t i, std::size_t j) { return m.row(k0 + i).bin(k0 + j); };
    auto a = [&](std::size_t i, std::size_t j) { return m.row(k0 + i).ring(k1 + j).s(); };
    auto b = [&](std::size_t i, std::size_t j) { return m.row(k0 + i).ring(k1 + k2 + j); };
    auto d = [&](std::size_t i, std::size_t j) { return m.row(k0 + k1 + i).ring(k1 + k2 + j).t(); };

    MixedMatrix h(sh);

    // (A1^T, I | uS^T, 0, 0)
    for (std::size_t i = 0; i < alpha - k0; ++i) {
        MixedVector v(sh);
        for (std::size_t j = 0; j < k0; ++j) v.set_bin(j, a1(j, i));
        v.set_bin(k0 + i, true);
        for (std::size_t j = 0; j < k1; ++j)
            if (s(j, i)) v.set_ring(j, RingElem::u());
        h.push_back(unpermute_columns(v, sf.binary_perm, sf.ring_perm));
    }

    // (P^T, 0 | (B1+uB2)^T + D^T A^T, D^T, I)
    for (std::size_t i = 0; i < rest; ++i) {
        MixedVector v(sh);
        for (std::size_t j = 0; j < k0; ++j) v.set_bin(j, p(j, i));
        for (std::size_t j = 0; j < k1; ++j) {
            RingElem e = b(j, i);
            for (std::size_t l = 0; l < k2; ++l)
                if (d(l, i) && a(j, l)) e += RingElem::one();
            v.set_ring(j, e);
        }
        for (std::size_t l = 0; l < k2; ++l)
            if (d(l, i)) v.set_ring(k1 + l, RingElem::one());
        v.set_ring(k1 + k2 + i, RingElem::one());
        h.push_back(unpermute_columns(v, sf.binary_perm, sf.ring_perm));
    }

    // (0, 0 | uA^T, uI, 0)
    for (std::size_t i = 0; i < k2; ++i) {
        MixedVector v(sh);
        for (std::size_t j = 0; j < k1; ++j)
            if (a(j, i)) v.set_ring(j, RingElem::u());
        v.set_ring(k1 + i, RingElem::u());
        h.push_back(unpermute_columns(v, sf.binary_perm, sf.ring_perm));
    }
    return h;
}

RowReduction binary_row_reduce(const BinaryMatrix& b) {
    std::vector<BitVec> rows = b.row_list();
    std::vector<std::size_t> pivots;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < b.cols() && rank < rows.size(); ++c) {
        std::size_t p = rank;
        while (p < rows.size() && !rows[p].get(c)) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[rank], rows[p]);
        for (std::size_t r = 0; r < rows.size(); ++r)
            if (r != rank && rows[r].get(c)) rows[r] ^= rows[rank];
        pivots.push_back(c);
        ++rank;
    }
    rows.resize(rank);
    return {BinaryMatrix(b.cols(), std::move(rows)), std::move(pivots)};
}

BinaryMatrix binary_dual(const BinaryMatrix& b) {
    const RowReduction rr = binary_row_reduce(b);
    std::vector<bool> is_pivot(b.cols(), false);
    for (auto c : rr.pivots) is_pivot[c] = true;
    BinaryMatrix h(b.cols());
    for (std::size_t f = 0; f < b.cols(); ++f) {
        if (is_pivot[f]) continue;
        BitVec v(b.cols());
        v.set(f, true);
        for (std::size_t i = 0; i < rr.rank(); ++i)
            if (rr.basis.get(i, f)) v.set(rr.pivots[i], true);
        h.push_back(std::move(v));
    }
    return h;
}

BinaryMatrix binary_gram(const BinaryMatrix& b) {
    BinaryMatrix g(b.rows(), b.rows());
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = i; j < b.rows(); ++j) {
            const bool x = BitVec::dot(b.row(i), b.row(j));
            g.set(i, j, x);
            g.set(j, i, x);
        }
    return g;
}

MixedVector permute_columns(const MixedVector& v, const std::vector<std::size_t>& binary_perm,
                            const std::vector<std::size_t>& ring_perm) {
    MixedVector out(v.shape());
    for (std::size_t p = 0; p < binary_perm.size(); ++p) out.set_bin(p, v.bin(binary_perm[p]));
    for (std::size_t p = 0; p < ring_perm.size(); ++p) out.set_ring(p, v.ring(ring_perm[p]));
    return out;
}

MixedVector unpermute_columns(const MixedVector& v, const std::vector<std::size_t>& binary_perm,
                              const std::vector<std::size_t>& ring_perm) {
    MixedVector out(v.shape());
    for (std::size_t p = 0; p < binary_perm.size(); ++p) out.set_bin(binary_perm[p], v.bin(p));
    for (std::size_t p = 0; p < ring_perm.size(); ++p) out.set_ring(ring_perm[p], v.ring(p));
    return out;
}

}  // namespace z2r
