// test_support.hpp - independent oracles and helpers shared by the test
// suites.  Everything here is deliberately naive and must stay decoupled
// from the library code paths it is used to check.

#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "matnorm/core.hpp"
#include "matnorm/rng.hpp"

namespace testsupport {

inline bool close_rel(double a, double b, double tol) {
    const double scale = std::max({std::abs(a), std::abs(b), 1.0});
    return std::abs(a - b) <= tol * scale;
}

// Plain triple loop, no blocking, no symmetrization.
inline matnorm::Matrix naive_matmul(const matnorm::Matrix& a, const matnorm::Matrix& b) {
    const std::size_t m = a.rows(), k = a.cols(), n = b.cols();
    std::vector<double> r(m * n, 0.0);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t l = 0; l < k; ++l) r[i * n + j] += a(i, l) * b(l, j);
    return matnorm::Matrix(m, n, std::move(r));
}

inline matnorm::Vector naive_matvec(const matnorm::Matrix& a, const matnorm::Vector& x) {
    std::vector<double> y(a.rows(), 0.0);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) y[i] += a(i, j) * x[j];
    return matnorm::Vector(std::move(y));
}

// Eigenvalues of a symmetric 2x2 [[a,b],[b,c]] by the quadratic formula.
struct TwoByTwoEigs {
    double min;
    double max;
};

inline TwoByTwoEigs quadratic_eigs(double a, double b, double c) {
    const double mean = 0.5 * (a + c);
    const double disc = std::sqrt(0.25 * (a - c) * (a - c) + b * b);
    return {mean - disc, mean + disc};
}

// Max of ||A u||_q over all 2^n sign vectors, one fresh matvec per u.
inline double naive_sign_max(const matnorm::Matrix& a, matnorm::NormIndex q) {
    const std::size_t n = a.cols();
    std::vector<double> u(n), image(a.rows());
    const std::uint64_t total = std::uint64_t{1} << n;
    double best = -1.0;
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        for (std::size_t j = 0; j < n; ++j) u[j] = (idx >> j) & 1u ? -1.0 : 1.0;
        matnorm::matvec_into(a, u, image);
        best = std::max(best, matnorm::vec_norm(std::span<const double>(image), q));
    }
    return best;
}

inline matnorm::Matrix random_matrix(matnorm::SplitMix64& rng, std::size_t m, std::size_t n) {
    std::vector<double> e(m * n);
    for (auto& v : e) v = rng.uniform(-1.0, 1.0);
    return matnorm::Matrix(m, n, std::move(e));
}

inline matnorm::Matrix random_symmetric(matnorm::SplitMix64& rng, std::size_t n) {
    std::vector<double> e(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            const double v = rng.uniform(-1.0, 1.0);
            e[i * n + j] = v;
            e[j * n + i] = v;
        }
    return matnorm::Matrix(n, n, std::move(e));
}

inline matnorm::Vector random_vector(matnorm::SplitMix64& rng, std::size_t n) {
    std::vector<double> e(n);
    for (auto& v : e) v = rng.uniform(-1.0, 1.0);
    return matnorm::Vector(std::move(e));
}

}  // namespace testsupport
