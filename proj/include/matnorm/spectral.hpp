// spectral.hpp - symmetric eigensolver (cyclic-by-rows Jacobi), a power-
// iteration cross-check, and the positive-semidefinite matrix square root.
//
// Jacobi sweeps rotate every off-diagonal pivot in row order until the
// off-diagonal Frobenius mass drops below 1e-14 * ||S||_F (at most 64
// sweeps).  That is slower than QR-style solvers but unconditionally robust
// at the matrix sizes this library targets, and it is deterministic for a
// fixed sweep order.

#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

#include "matnorm/core.hpp"
#include "matnorm/rng.hpp"

namespace matnorm {

struct EigenDecomposition {
    std::vector<double> values;  // ascending
    Matrix vectors;              // column j pairs with values[j]; orthonormal

    Vector eigenvector(std::size_t j) const { return vectors.col(j); }
};

namespace detail {

// Returns ||S||_F after checking squareness and symmetry to 1e-12 * ||S||_F.
inline double require_symmetric(const Matrix& s, const char* who) {
    if (s.rows() != s.cols())
        throw std::invalid_argument(std::string(who) + ": matrix must be square");
    const double fro = s.frobenius_norm();
    const std::size_t n = s.rows();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (std::abs(s(i, j) - s(j, i)) > 1e-12 * fro)
                throw std::invalid_argument(std::string(who) + ": matrix must be symmetric");
    return fro;
}

}  // namespace detail

inline EigenDecomposition jacobi_eigh(const Matrix& s_in) {
    const double fro = detail::require_symmetric(s_in, "jacobi_eigh");
    const std::size_t n = s_in.rows();

    // Work on the symmetrized copy; accumulate rotations in u (S = U D U^T).
    std::vector<double> a(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i * n + j] = 0.5 * (s_in(i, j) + s_in(j, i));
    std::vector<double> u(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) u[i * n + i] = 1.0;

    const auto off_mass = [&] {
        double t = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) t += a[i * n + j] * a[i * n + j];
        return std::sqrt(2.0 * t);
    };

    const double threshold = 1e-14 * fro;
    const int max_sweeps = 64;
    int sweep = 0;
    while (off_mass() > threshold) {
        if (sweep++ == max_sweeps)
            throw convergence_error("jacobi_eigh: off-diagonal mass did not converge in " +
                                    std::to_string(max_sweeps) + " sweeps");
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = a[p * n + q];
                if (apq == 0.0) continue;
                const double app = a[p * n + p];
                const double aqq = a[q * n + q];
                const double theta = (aqq - app) / (2.0 * apq);
                const double t =
                    (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::hypot(theta, 1.0));
                const double c = 1.0 / std::hypot(t, 1.0);
                const double s = t * c;

                a[p * n + p] = app - t * apq;
                a[q * n + q] = aqq + t * apq;
                a[p * n + q] = a[q * n + p] = 0.0;
                for (std::size_t i = 0; i < n; ++i) {
                    if (i == p || i == q) continue;
                    const double aip = a[i * n + p];
                    const double aiq = a[i * n + q];
                    a[i * n + p] = a[p * n + i] = c * aip - s * aiq;
                    a[i * n + q] = a[q * n + i] = s * aip + c * aiq;
                }
                for (std::size_t i = 0; i < n; ++i) {
                    const double uip = u[i * n + p];
                    const double uiq = u[i * n + q];
                    u[i * n + p] = c * uip - s * uiq;
                    u[i * n + q] = s * uip + c * uiq;
                }
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return a[x * n + x] < a[y * n + y]; });

    std::vector<double> values(n);
    std::vector<double> vecs(n * n);
    for (std::size_t j = 0; j < n; ++j) {
        values[j] = a[order[j] * n + order[j]];
        for (std::size_t i = 0; i < n; ++i) vecs[i * n + j] = u[i * n + order[j]];
    }
    return {std::move(values), Matrix(n, n, std::move(vecs))};
}

inline std::pair<double, Vector> max_eigenpair(const Matrix& s) {
    EigenDecomposition d = jacobi_eigh(s);
    const std::size_t top = d.values.size() - 1;
    return {d.values[top], d.eigenvector(top)};
}

struct PowerIterationResult {
    double value = 0.0;
    std::uint64_t iterations = 0;
    bool converged = false;
};

// Dominant-eigenvalue estimate for a symmetric PSD matrix.  Independent of
// the Jacobi path above, which is what makes it useful as a cross-check.
inline PowerIterationResult power_iteration(const Matrix& s, std::uint64_t seed) {
    detail::require_symmetric(s, "power_iteration");
    const std::size_t n = s.rows();
    SplitMix64 rng(seed);

    std::vector<double> v(n);
    double nv = 0.0;
    do {
        for (auto& x : v) x = rng.normal();
        nv = vec_norm(std::span<const double>(v), NormIndex::Two);
    } while (nv == 0.0);
    for (auto& x : v) x /= nv;

    std::vector<double> w(n);
    const std::uint64_t max_iters = 100000;
    double lambda = 0.0, prev = 0.0;
    for (std::uint64_t it = 1; it <= max_iters; ++it) {
        matvec_into(s, std::span<const double>(v), std::span<double>(w));
        const double nw = vec_norm(std::span<const double>(w), NormIndex::Two);
        if (nw == 0.0) return {0.0, it, true};
        lambda = 0.0;
        for (std::size_t i = 0; i < n; ++i) lambda += v[i] * w[i];
        for (std::size_t i = 0; i < n; ++i) v[i] = w[i] / nw;
        if (it > 1 && std::abs(lambda - prev) <= 1e-12 * std::max(1.0, std::abs(lambda)))
            return {lambda, it, true};
        prev = lambda;
    }
    return {lambda, max_iters, false};
}

// U D^{1/2} U^T for symmetric S with spectrum >= -1e-10 * ||S||_F; eigen-
// values in the rounding band [-tol, 0] are clamped to zero.  The output is
// assembled on the upper triangle and mirrored, hence exactly symmetric.
inline Matrix psd_sqrt(const Matrix& s) {
    EigenDecomposition d = jacobi_eigh(s);
    const std::size_t n = s.rows();
    const double tol = 1e-10 * s.frobenius_norm();

    std::vector<double> roots(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double lam = d.values[k];
        if (lam < -tol)
            throw not_psd_error("psd_sqrt: eigenvalue " + std::to_string(lam) +
                                " below the positive-semidefinite clamp");
        roots[k] = lam > 0.0 ? std::sqrt(lam) : 0.0;
    }

    std::vector<double> b(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            double acc = 0.0;
            for (std::size_t k = 0; k < n; ++k)
                acc += roots[k] * d.vectors(i, k) * d.vectors(j, k);
            b[i * n + j] = acc;
            b[j * n + i] = acc;
        }
    }
    return Matrix(n, n, std::move(b));
}

}  // namespace matnorm
