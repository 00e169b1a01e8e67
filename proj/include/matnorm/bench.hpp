// bench.hpp - scaling benchmark for the nine norms: seeded matrix corpora,
// median-of-reps timing, and growth-model fits that separate the exponential
// cases from the polynomial ones.
//
// Wall time is measured with steady_clock.  A warmup evaluation is discarded
// and doubles as calibration: evaluations cheaper than ~1ms are repeated in
// an inner loop and averaged, so one timed sample is never at clock-
// granularity scale.  The recorded statistic is the median of `reps`
// samples, robust to scheduler noise.

#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <span>
#include <vector>

#include "matnorm/core.hpp"
#include "matnorm/norms.hpp"
#include "matnorm/rng.hpp"

namespace matnorm {

struct BenchRecord {
    NormPair pair;
    std::size_t n;  // columns; the size variable for growth fits
    std::size_t m;  // rows
    std::uint32_t reps;
    double median_seconds;
    std::uint64_t seed;  // user seed, not the derived stream seed
};

enum class GrowthModel { Exponential, Polynomial };

struct GrowthFit {
    NormPair pair;
    GrowthModel model;
    double slope;      // log2-seconds per unit n (exp) or per doubling (poly)
    double intercept;
    double r_squared;  // in [0, 1]
};

// The benchmark corpus generator: uniform[-1,1] entries from a splitmix64
// stream whose seed is mix64(mix64(mix64(seed) ^ rows) ^ cols).  Depends on
// nothing but (seed, rows, cols).
inline Matrix random_matrix(std::uint64_t seed, std::size_t rows, std::size_t cols) {
    SplitMix64 rng(mix64(mix64(mix64(seed) ^ rows) ^ cols));
    std::vector<double> e(rows * cols);
    for (auto& v : e) v = rng.uniform(-1.0, 1.0);
    return Matrix(rows, cols, std::move(e));
}

namespace detail {

inline volatile double bench_sink = 0.0;

inline double seconds_between(std::chrono::steady_clock::time_point a,
                              std::chrono::steady_clock::time_point b) {
    return std::chrono::duration<double>(b - a).count();
}

}  // namespace detail

inline BenchRecord bench_norm(NormPair pair, std::size_t n, std::size_t m,
                              std::uint32_t reps, std::uint64_t seed,
                              const SignSearchOptions& opt = {}) {
    if (reps < 3) throw std::invalid_argument("bench_norm: reps must be at least 3");
    const Matrix a = random_matrix(seed, m, n);

    using clock = std::chrono::steady_clock;
    double sink = 0.0;

    // Warmup + calibration.  Guard refusals surface here, before any timing.
    auto t0 = clock::now();
    sink += induced_norm(a, pair, opt).value;
    auto t1 = clock::now();
    const double warm = detail::seconds_between(t0, t1);
    std::uint64_t iters = 1;
    if (warm < 1e-3)
        iters = std::min<std::uint64_t>(
            static_cast<std::uint64_t>(1e-3 / std::max(warm, 1e-9)) + 1, 10'000'000);

    std::vector<double> samples(reps);
    for (std::uint32_t r = 0; r < reps; ++r) {
        t0 = clock::now();
        for (std::uint64_t k = 0; k < iters; ++k) sink += induced_norm(a, pair, opt).value;
        t1 = clock::now();
        samples[r] = detail::seconds_between(t0, t1) / static_cast<double>(iters);
    }
    detail::bench_sink = sink;

    std::sort(samples.begin(), samples.end());
    const double median = reps % 2 ? samples[reps / 2]
                                   : 0.5 * (samples[reps / 2 - 1] + samples[reps / 2]);
    return {pair, n, m, reps, median, seed};
}

// Least squares of log2(median_seconds) against n (exponential model) or
// against log2(n) (polynomial model).
inline GrowthFit fit_model(std::span<const BenchRecord> records, GrowthModel model) {
    if (records.empty()) throw std::invalid_argument("fit_model: no records");
    const NormPair pair = records.front().pair;
    std::vector<std::size_t> sizes;
    for (const auto& r : records) {
        if (!(r.pair == pair))
            throw std::invalid_argument("fit_model: records span more than one norm pair");
        sizes.push_back(r.n);
    }
    std::sort(sizes.begin(), sizes.end());
    sizes.erase(std::unique(sizes.begin(), sizes.end()), sizes.end());
    if (sizes.size() < 5)
        throw std::invalid_argument("fit_model: need at least 5 distinct sizes");

    const double count = static_cast<double>(records.size());
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (const auto& r : records) {
        const double x = model == GrowthModel::Exponential
                             ? static_cast<double>(r.n)
                             : std::log2(static_cast<double>(r.n));
        const double y = std::log2(r.median_seconds);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double denom = count * sxx - sx * sx;
    const double slope = (count * sxy - sx * sy) / denom;
    const double intercept = (sy - slope * sx) / count;

    double ss_res = 0.0, ss_tot = 0.0;
    const double mean_y = sy / count;
    for (const auto& r : records) {
        const double x = model == GrowthModel::Exponential
                             ? static_cast<double>(r.n)
                             : std::log2(static_cast<double>(r.n));
        const double y = std::log2(r.median_seconds);
        const double e = y - (slope * x + intercept);
        ss_res += e * e;
        ss_tot += (y - mean_y) * (y - mean_y);
    }
    // A flat series has ss_tot at rounding scale; model discrimination on
    // that noise is meaningless, and slope ~ 0 fits either model perfectly.
    const double flat_floor = 1e-24 * count * std::max(1.0, mean_y * mean_y);
    const double r2 =
        ss_tot <= flat_floor ? 1.0 : std::max(0.0, 1.0 - ss_res / ss_tot);
    return {pair, model, slope, intercept, r2};
}

// Both models fitted; the better r-squared wins, polynomial on ties (a flat
// series is polynomial of degree zero, not exponential).
inline GrowthFit fit_growth(std::span<const BenchRecord> records) {
    const GrowthFit e = fit_model(records, GrowthModel::Exponential);
    const GrowthFit p = fit_model(records, GrowthModel::Polynomial);
    return p.r_squared >= e.r_squared ? p : e;
}

}  // namespace matnorm
