// sign_search.hpp - exhaustive maximization of u -> ||A u||_q over sign
// vectors u in {-1,+1}^n.
//
// Since ||A(-u)||_q = ||A u||_q, the first coordinate is pinned to +1 and
// only 2^(n-1) candidates are visited.  Enumeration follows the binary
// reflected Gray code on the free coordinates: one sign flips per step, so
// the image A u is maintained incrementally in O(m) per candidate instead of
// O(mn).  A fresh matvec every 2^10 steps caps floating-point drift, and the
// reported maximum is always recomputed from scratch at the winning vector.

#pragma once

#include <bit>
#include <cstdint>
#include <thread>
#include <vector>

#include "matnorm/core.hpp"

namespace matnorm {

class SignVector {
public:
    explicit SignVector(std::size_t n) : entries_(n, 1.0) {
        if (n == 0) throw std::invalid_argument("SignVector: length must be positive");
    }

    explicit SignVector(std::vector<double> entries) : entries_(std::move(entries)) {
        if (entries_.empty()) throw std::invalid_argument("SignVector: length must be positive");
        for (double v : entries_) {
            if (v != 1.0 && v != -1.0)
                throw std::invalid_argument("SignVector: entries must be exactly +1 or -1");
        }
    }

    std::size_t size() const { return entries_.size(); }
    double operator[](std::size_t j) const { return entries_[j]; }
    const std::vector<double>& entries() const { return entries_; }

    void flip(std::size_t j) {
        if (j >= entries_.size()) throw std::out_of_range("SignVector::flip: index out of range");
        entries_[j] = -entries_[j];
    }

    Vector to_vector() const { return Vector(entries_); }

    friend bool operator==(const SignVector&, const SignVector&) = default;

private:
    std::vector<double> entries_;
};

// Coordinate flipped when advancing to `step` (step >= 1) in the Gray walk.
// Coordinate 0 is pinned, so flips land in [1, n).
inline std::size_t gray_flip_position(std::uint64_t step) {
    return static_cast<std::size_t>(std::countr_zero(step)) + 1;
}

// Materialized flip sequence of length 2^(k-1) - 1.  Fine for enumeration-
// scale k; the maximizer below streams the positions instead of storing them.
inline std::vector<std::size_t> gray_flip_sequence(std::size_t k) {
    if (k < 1 || k > 31)
        throw guard_error("gray_flip_sequence: k must be in [1, 31]");
    const std::uint64_t len = (std::uint64_t{1} << (k - 1)) - 1;
    std::vector<std::size_t> seq(len);
    for (std::uint64_t s = 1; s <= len; ++s) seq[s - 1] = gray_flip_position(s);
    return seq;
}

// Sign state after `step` Gray transitions: the reflected-Gray encoding of
// the step index, mapped onto coordinates 1..k-1 (coordinate 0 stays +1).
inline SignVector signs_from_step(std::size_t k, std::uint64_t step) {
    const std::uint64_t g = step ^ (step >> 1);
    SignVector s(k);
    for (std::size_t b = 0; b + 1 < k; ++b)
        if ((g >> b) & 1u) s.flip(b + 1);
    return s;
}

// Walk state: `image` tracks matvec(A, signs) up to bounded drift.
struct GrayCursor {
    std::uint64_t step = 0;
    SignVector signs;
    std::vector<double> image;
};

inline GrayCursor make_gray_cursor(const Matrix& a) {
    GrayCursor c{0, SignVector(a.cols()), std::vector<double>(a.rows())};
    matvec_into(a, c.signs.entries(), c.image);
    return c;
}

inline void refresh_image(GrayCursor& c, const Matrix& a) {
    matvec_into(a, c.signs.entries(), c.image);
}

// Negate sign j and adjust the image by -2 * old_sign * col(A, j).
inline void flip_update(GrayCursor& c, const Matrix& a, std::size_t j) {
    if (j < 1 || j >= a.cols())
        throw std::invalid_argument("flip_update: flip position must be a free coordinate");
    const double twice_old = 2.0 * c.signs[j];
    const std::size_t m = a.rows();
    for (std::size_t i = 0; i < m; ++i) c.image[i] -= twice_old * a(i, j);
    c.signs.flip(j);
    ++c.step;
}

struct SignSearchOptions {
    bool force = false;   // override the 2^30 enumeration guard
    unsigned threads = 1;
};

struct SignSearchResult {
    double value = 0.0;
    SignVector signs;
    std::uint64_t candidates = 0;  // always 2^(n-1)
};

// Exponential-path guard shared by the {-1,1}^k enumerators.
inline void check_enumeration_guard(std::size_t exponent, bool force) {
    if (exponent > 63)
        throw guard_error("enumeration over 2^" + std::to_string(exponent) +
                          " sign vectors is not representable");
    if (exponent > 30 && !force)
        throw guard_error("refusing to enumerate 2^" + std::to_string(exponent) +
                          " sign vectors; enable the override to proceed");
}

// Exact maximum of ||A u||_q over u in {-1,1}^n, q in {1, 2}.  Ties go to
// the earliest Gray visitation step.  With W > 1 workers the step range is
// split into 2^ceil(log2 W) contiguous blocks (constant high-order Gray
// coordinates); each block is walked locally and the merge keys on the
// sequential step index, so the result matches the single-thread walk.
inline SignSearchResult maximize_signs(const Matrix& a, NormIndex q,
                                       const SignSearchOptions& opt = {}) {
    if (q == NormIndex::Infinity)
        throw std::invalid_argument("maximize_signs: q must be the 1- or 2-norm");
    const std::size_t n = a.cols();
    check_enumeration_guard(n, opt.force);

    const std::uint64_t total = std::uint64_t{1} << (n - 1);
    const unsigned want = opt.threads == 0 ? 1 : opt.threads;
    std::size_t log_chunks = 0;
    while ((std::uint64_t{1} << log_chunks) < want && log_chunks + 1 < n) ++log_chunks;
    const std::uint64_t chunks = std::uint64_t{1} << log_chunks;
    const std::uint64_t chunk_len = total >> log_chunks;

    struct ChunkBest {
        double value = 0.0;
        std::uint64_t step = 0;
    };
    std::vector<ChunkBest> best(chunks);

    auto run_chunk = [&](std::uint64_t ci) {
        const std::uint64_t begin = ci * chunk_len;
        const std::uint64_t end = begin + chunk_len;
        GrayCursor cur{begin, signs_from_step(n, begin), std::vector<double>(a.rows())};
        refresh_image(cur, a);
        double bv = vec_norm(std::span<const double>(cur.image), q);
        std::uint64_t bs = begin;
        for (std::uint64_t s = begin + 1; s < end; ++s) {
            flip_update(cur, a, gray_flip_position(s));
            if ((s & 0x3FFu) == 0) refresh_image(cur, a);
            const double v = vec_norm(std::span<const double>(cur.image), q);
            if (v > bv) {
                bv = v;
                bs = s;
            }
        }
        best[ci] = {bv, bs};
    };

    const unsigned workers =
        static_cast<unsigned>(std::min<std::uint64_t>(want, chunks));
    if (workers <= 1) {
        for (std::uint64_t ci = 0; ci < chunks; ++ci) run_chunk(ci);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                for (std::uint64_t ci = w; ci < chunks; ci += workers) run_chunk(ci);
            });
        }
        for (auto& t : pool) t.join();
    }

    // Chunks cover increasing step ranges, so a strict comparison in chunk
    // order keeps the earliest step among exact ties.
    ChunkBest winner = best[0];
    for (std::uint64_t ci = 1; ci < chunks; ++ci)
        if (best[ci].value > winner.value) winner = best[ci];

    SignVector u = signs_from_step(n, winner.step);
    std::vector<double> image(a.rows());
    matvec_into(a, u.entries(), image);
    const double value = vec_norm(std::span<const double>(image), q);
    return {value, std::move(u), total};
}

}  // namespace matnorm
