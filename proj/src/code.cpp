#include "z2r/code.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <mutex>
#include <thread>

#include "z2r/errors.hpp"

namespace z2r {

namespace {

constexpr unsigned kChunkBits = 14;

/// Minimum weight over Gray-code indices [lo, hi), skipping index 0.
std::size_t scan_range(const BinaryMatrix& basis, std::uint64_t lo, std::uint64_t hi) {
    BitVec acc(basis.cols());
    const std::uint64_t g = lo ^ (lo >> 1);
    for (std::size_t i = 0; i < basis.rows(); ++i)
        if ((g >> i) & 1u) acc ^= basis.row(i);
    std::size_t best = SIZE_MAX;
    if (lo != 0) best = acc.popcount();
    for (std::uint64_t idx = lo + 1; idx < hi; ++idx) {
        acc ^= basis.row(static_cast<std::size_t>(std::countr_zero(idx)));
        best = std::min(best, acc.popcount());
    }
    return best;
}

std::size_t parallel_scan(const BinaryMatrix& basis, std::uint64_t total, unsigned jobs) {
    const std::uint64_t chunk = std::min<std::uint64_t>(total, std::uint64_t{1} << kChunkBits);
    const std::uint64_t chunks = (total + chunk - 1) / chunk;
    jobs = static_cast<unsigned>(std::clamp<std::uint64_t>(jobs, 1, chunks));

    std::atomic<std::uint64_t> next{0};
    std::vector<std::size_t> local(jobs, SIZE_MAX);
    auto worker = [&](unsigned w) {
        for (std::uint64_t c = next++; c < chunks; c = next++) {
            const std::uint64_t lo = c * chunk;
            local[w] = std::min(local[w], scan_range(basis, lo, std::min(total, lo + chunk)));
        }
    };
    if (jobs == 1) {
        worker(0);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < jobs; ++w) pool.emplace_back(worker, w);
    }
    return *std::min_element(local.begin(), local.end());
}

}  // namespace

MinDistance min_weight(const BinaryMatrix& basis, const EnumLimits& limits) {
    const std::size_t k = basis.rows();
    if (k == 0) return std::nullopt;
    if (k > limits.cap_exponent) {
        const std::uint64_t sampled = std::uint64_t{1} << limits.cap_exponent;
        std::optional<std::size_t> bound;
        if (sampled > 1) bound = parallel_scan(basis, sampled, limits.jobs);
        throw CapExceeded("dimension " + std::to_string(k) + " exceeds enumeration cap 2^" +
                              std::to_string(limits.cap_exponent),
                          bound);
    }
    return parallel_scan(basis, std::uint64_t{1} << k, limits.jobs);
}

BinaryCode::BinaryCode(const BinaryMatrix& generators) : distance_(std::make_shared<MinDistance>()) {
    RowReduction rr = binary_row_reduce(generators);
    basis_ = std::move(rr.basis);
    pivots_ = std::move(rr.pivots);
}

MinDistance BinaryCode::min_distance(const EnumLimits& limits) const {
    if (dimension() == 0) return std::nullopt;
    // the cached value never depends on limits, only whether it can be computed does
    static std::mutex mu;
    {
        std::lock_guard lock(mu);
        if (distance_->has_value()) return *distance_;
    }
    MinDistance d = min_weight(basis_, limits);
    std::lock_guard lock(mu);
    *distance_ = d;
    return d;
}

bool BinaryCode::is_lcd() const { return f2_invertible(binary_gram(basis_)); }

BinaryCode BinaryCode::dual() const { return BinaryCode(binary_dual(basis_)); }

bool BinaryCode::contains(const BitVec& v) const {
    if (v.size() != length()) return false;
    BitVec r = v;
    for (std::size_t i = 0; i < dimension(); ++i)
        if (r.get(pivots_[i])) r ^= basis_.row(i);
    return r.none();
}

std::vector<BitVec> BinaryCode::codewords(const EnumLimits& limits) const {
    if (dimension() > limits.cap_exponent)
        throw CapExceeded("binary code of dimension " + std::to_string(dimension()) + " exceeds enumeration cap");
    std::vector<BitVec> out;
    out.reserve(std::size_t{1} << dimension());
    BitVec acc(length());
    out.push_back(acc);
    for (std::uint64_t idx = 1; idx < (std::uint64_t{1} << dimension()); ++idx) {
        acc ^= basis_.row(static_cast<std::size_t>(std::countr_zero(idx)));
        out.push_back(acc);
    }
    std::sort(out.begin(), out.end());
    return out;
}

struct Code::Cache {
    std::once_flag sf_once;
    StandardForm sf;
    std::once_flag gray_once;
    BinaryCode gray;
};

Code::Code(MixedMatrix generator) : gen_(std::move(generator)), cache_(std::make_shared<Cache>()) {}

const StandardForm& Code::standard_form() const {
    std::call_once(cache_->sf_once, [this] { cache_->sf = z2r::standard_form(gen_); });
    return cache_->sf;
}

const BinaryCode& Code::gray_image() const {
    std::call_once(cache_->gray_once, [this] {
        BinaryMatrix b(shape().gray_length());
        for (const auto& row : gen_.row_list()) {
            b.push_back(gray(row));
            b.push_back(gray(scalar_mul(RingElem::u(), row)));
        }
        cache_->gray = BinaryCode(b);
    });
    return cache_->gray;
}

std::vector<MixedVector> Code::codewords(const EnumLimits& limits) const {
    std::vector<MixedVector> out;
    for (const auto& b : gray_image().codewords(limits)) out.push_back(gray_inverse(b, shape()));
    std::sort(out.begin(), out.end());
    return out;
}

Code Code::dual(DualStrategy strategy) const {
    if (strategy == DualStrategy::kStructural) return Code(dual_generator(standard_form()));
    MixedMatrix h(shape());
    const BinaryCode d = gray_image().dual();
    for (const auto& row : d.generator().row_list()) h.push_back(gray_inverse(row, shape()));
    return Code(std::move(h));
}

MinDistance Code::min_lee_distance(const EnumLimits& limits) const { return gray_image().min_distance(limits); }

BinaryCode Code::projection_alpha() const {
    BinaryMatrix b(shape().alpha);
    for (const auto& row : gen_.row_list()) b.push_back(row.bin_plane());
    return BinaryCode(b);
}

Code Code::projection_beta() const {
    const Shape sh{0, shape().beta};
    MixedMatrix m(sh);
    for (const auto& row : gen_.row_list()) m.push_back(MixedVector(BitVec(0), row.s_plane(), row.t_plane()));
    return Code(std::move(m));
}

bool Code::is_separable() const {
    return log2_size() == projection_alpha().dimension() + projection_beta().log2_size();
}

bool Code::is_self_orthogonal() const { return gram(gen_).is_zero(); }

bool Code::contains(const MixedVector& v) const {
    return v.shape() == shape() && gray_image().contains(gray(v));
}

bool Code::same_codewords(const Code& other) const {
    return shape() == other.shape() && gray_image() == other.gray_image();
}

}  // namespace z2r
