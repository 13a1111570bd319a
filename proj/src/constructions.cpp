#include "z2r/constructions.hpp"

#include "z2r/errors.hpp"
#include "z2r/lcd.hpp"
#include "z2r/search.hpp"

namespace z2r {

namespace {

bool mixed_alphabet(const Shape& s) { return s.alpha > 0 && s.beta > 0; }

}  // namespace

TemplateResult build_template(const TemplateInput& in) {
    const std::size_t k = in.a.rows();
    if (in.b.rows() != k)
        throw ShapeMismatch("template: A has " + std::to_string(k) + " rows, B has " + std::to_string(in.b.rows()));
    if (in.b.shape().alpha != 0) throw ShapeMismatch("template: B must be a pure R matrix");

    const Shape sh{k + in.a.cols(), in.zero_width + in.b.shape().beta};
    MixedMatrix g(sh);
    for (std::size_t i = 0; i < k; ++i) {
        MixedVector v(sh);
        v.set_bin(i, true);
        for (std::size_t j = 0; j < in.a.cols(); ++j) v.set_bin(k + j, in.a.get(i, j));
        for (std::size_t j = 0; j < in.b.shape().beta; ++j)
            v.set_ring(in.zero_width + j, RingElem::u() * in.b.row(i).ring(j));
        g.push_back(std::move(v));
    }

    BinaryMatrix m = binary_gram(in.a);
    for (std::size_t i = 0; i < k; ++i) m.set(i, i, !m.get(i, i));

    TemplateResult r{Code(std::move(g))};
    r.condition_holds = f2_invertible(m);
    r.gram_invertible = gram_criterion(r.code);
    r.is_lcd = is_lcd_ground_truth(r.code);
    return r;
}

ConcatResult concat_lcd(const ConcatInput& in, const EnumLimits& limits) {
    std::vector<std::string> violations;
    const std::size_t k = in.g1.rows();
    // an empty G2 contributes nothing and is taken as k zero rows
    const bool g2_empty = in.g2.rows() == 0;
    if (!g2_empty && in.g2.rows() != k)
        violations.push_back("row count mismatch: G1 has " + std::to_string(k) + " rows, G2 has " +
                             std::to_string(in.g2.rows()));
    if (!gram(in.g2).is_zero()) violations.push_back("C2 is not self-orthogonal");
    const bool binary_lcd = f2_invertible(binary_gram(in.g1));
    if (!binary_lcd) violations.push_back("C1 is not binary LCD (G1 G1^T singular)");
    if (!violations.empty()) {
        std::string msg = "concat: invalid input";
        for (const auto& v : violations) msg += "; " + v;
        throw PreconditionError(msg);
    }

    const std::size_t n1 = in.g1.cols();
    const Shape s2 = in.g2.shape();
    const Shape sh{n1 + s2.alpha, s2.beta};
    MixedMatrix g(sh);
    for (std::size_t i = 0; i < k; ++i) {
        MixedVector v(sh);
        for (std::size_t j = 0; j < n1; ++j) v.set_bin(j, in.g1.get(i, j));
        if (!g2_empty) {
            const MixedVector& w = in.g2.row(i);
            for (std::size_t j = 0; j < s2.alpha; ++j) v.set_bin(n1 + j, w.bin(j));
            for (std::size_t j = 0; j < s2.beta; ++j) v.set_ring(j, w.ring(j));
        }
        g.push_back(std::move(v));
    }

    ConcatResult r{.code = Code(std::move(g))};
    r.binary_gram_invertible = binary_lcd;
    const RMatrix gm = gram(r.code.generator());
    r.gram_invertible = r_invertible(gm);
    const BinaryMatrix g1g1 = binary_gram(in.g1);
    r.gram_identity = true;
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            if (gm(i, j) != (g1g1.get(i, j) ? RingElem::u() : RingElem::zero())) r.gram_identity = false;
    r.is_lcd = is_lcd_ground_truth(r.code);
    if (!r.gram_identity) r.discrepancies.push_back("combined Gram differs from u * G1 G1^T");
    if (!r.is_lcd)
        r.discrepancies.push_back("constructed code is not LCD (C2 type k1 = " +
                                  std::to_string(Code(in.g2).type().k1) + ")");

    try {
        DistanceBound d;
        d.code = r.code.min_lee_distance(limits);
        d.first = BinaryCode(in.g1).min_distance(limits);
        d.second = g2_empty ? MinDistance{} : Code(in.g2).min_lee_distance(limits);
        const std::size_t bound = d.first.value_or(0) + d.second.value_or(0);
        d.holds = !d.code || *d.code >= bound;
        if (!d.holds)
            r.discrepancies.push_back("distance bound violated: d_L(C) = " + std::to_string(*d.code) + " < " +
                                      std::to_string(bound));
        r.distance = d;
    } catch (const CapExceeded&) {
    }
    return r;
}

MixedMatrix kronecker(const MixedMatrix& g1, const MixedMatrix& g2, const KronLimits& limits) {
    const Shape s1 = g1.shape();
    const Shape s2 = g2.shape();
    const std::size_t rows = g1.rows() * g2.rows();
    const std::size_t cols = s1.columns() * s2.columns();
    if (rows > limits.max_rows || cols > limits.max_columns)
        throw PreconditionError("kronecker: product " + std::to_string(rows) + "x" + std::to_string(cols) +
                                " exceeds configured limits");

    // column c of a factor: binary if c < alpha
    auto entry = [](const MixedVector& v, std::size_t c) {
        const std::size_t a = v.shape().alpha;
        if (c < a) return v.bin(c) ? RingElem::one() : RingElem::zero();
        return v.ring(c - a);
    };

    std::vector<std::pair<std::size_t, std::size_t>> bin_cols, ring_cols;
    for (std::size_t c1 = 0; c1 < s1.columns(); ++c1)
        for (std::size_t c2 = 0; c2 < s2.columns(); ++c2) {
            if (c1 < s1.alpha && c2 < s2.alpha)
                bin_cols.emplace_back(c1, c2);
            else
                ring_cols.emplace_back(c1, c2);
        }

    const Shape sh{bin_cols.size(), ring_cols.size()};
    MixedMatrix out(sh);
    for (std::size_t i = 0; i < g1.rows(); ++i)
        for (std::size_t j = 0; j < g2.rows(); ++j) {
            MixedVector v(sh);
            for (std::size_t p = 0; p < bin_cols.size(); ++p)
                v.set_bin(p, theta(entry(g1.row(i), bin_cols[p].first) * entry(g2.row(j), bin_cols[p].second)));
            for (std::size_t p = 0; p < ring_cols.size(); ++p)
                v.set_ring(p, entry(g1.row(i), ring_cols[p].first) * entry(g2.row(j), ring_cols[p].second));
            out.push_back(std::move(v));
        }
    return out;
}

RMatrix kronecker(const RMatrix& a, const RMatrix& b) {
    const std::size_t m = b.size();
    RMatrix k(a.size() * m);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j)
            for (std::size_t p = 0; p < m; ++p)
                for (std::size_t q = 0; q < m; ++q) k(i * m + p, j * m + q) = a(i, j) * b(p, q);
    return k;
}

KronResult kronecker_lcd(const Code& c1, const Code& c2, const EnumLimits& enum_limits, const KronLimits& limits) {
    KronResult r{.code = Code(kronecker(c1.generator(), c2.generator(), limits))};
    r.inputs_lcd = is_lcd_ground_truth(c1) && is_lcd_ground_truth(c2);
    r.extension_beyond_paper = mixed_alphabet(c1.shape()) || mixed_alphabet(c2.shape());
    r.gram_factorization = gram(r.code.generator()) == kronecker(gram(c1.generator()), gram(c2.generator()));
    r.is_lcd = is_lcd_ground_truth(r.code);
    if (r.inputs_lcd && !r.is_lcd) r.discrepancies.push_back("product of LCD codes is not LCD");
    if (!r.gram_factorization) r.discrepancies.push_back("Gram of the product does not factor");

    try {
        const MinDistance d1 = c1.min_lee_distance(enum_limits);
        const MinDistance d2 = c2.min_lee_distance(enum_limits);
        r.distance = r.code.min_lee_distance(enum_limits);
        r.expected_distance = (d1 && d2) ? MinDistance{*d1 * *d2} : MinDistance{};
        if (*r.distance != *r.expected_distance) r.discrepancies.push_back("d_L(C) differs from d_L(C1) d_L(C2)");
    } catch (const CapExceeded&) {
        r.distance.reset();
        r.expected_distance.reset();
    }
    return r;
}


namespace {

constexpr std::uint64_t kAttempts = 256;

// trial streams for these helpers are kept apart from the search stream
constexpr std::uint64_t kSelfOrthogonalStream = 0x5e1f0000ULL;
constexpr std::uint64_t kBinaryLcdStream = 0xb1000000ULL;

}  // namespace

std::optional<MixedMatrix> random_self_orthogonal(Shape shape, std::size_t k, std::uint64_t seed, std::uint64_t trial) {
    MixedMatrix g(shape);
    std::size_t log2 = 0;
    for (std::uint64_t attempt = 0; attempt < kAttempts && g.rows() < k; ++attempt) {
        const MixedMatrix cand =
            random_generator(shape, 1, seed ^ kSelfOrthogonalStream, trial * kAttempts + attempt);
        const MixedVector& v = cand.row(0);
        if (inner_product(v, v) != RingElem::zero()) continue;
        bool ok = true;
        for (const auto& w : g.row_list())
            if (inner_product(v, w) != RingElem::zero()) ok = false;
        if (!ok) continue;
        MixedMatrix next = g;
        next.push_back(v);
        const CodeType t = z2r::standard_form(next).type;
        // each kept row must add a new basis row, so the standard form keeps k rows
        if (t.rows() != next.rows() || t.log2_size() <= log2) continue;
        log2 = t.log2_size();
        g = std::move(next);
    }
    if (g.rows() < k) return std::nullopt;
    return z2r::standard_form(g).matrix;
}

std::optional<BinaryMatrix> random_binary_lcd(std::size_t n, std::size_t k, std::uint64_t seed, std::uint64_t trial) {
    for (std::uint64_t attempt = 0; attempt < kAttempts; ++attempt) {
        const MixedMatrix m = random_generator(Shape{n, 0}, k, seed ^ kBinaryLcdStream, trial * kAttempts + attempt);
        BinaryMatrix b(n);
        for (const auto& row : m.row_list()) b.push_back(row.bin_plane());
        if (f2_invertible(binary_gram(b))) return b;
    }
    return std::nullopt;
}

}  // namespace z2r
