// hardness.hpp - the max-cut reduction behind the exponential norm cases,
// run at desk scale.
//
// An MC-matrix for a graph on n vertices has every diagonal entry equal to
// n and off-diagonal entries -1 (edge) or 0 (non-edge).  Such matrices are
// strictly diagonally dominant, hence positive-definite, so they own a
// symmetric PSD square root S.  Since ||S u||_2^2 = u^T (S S) u = u^T A u,
// the (inf,2) norm of S squared equals the maximum of the quadratic form
// over sign vectors - the NP-complete max-cut decision quantity.  Deciding
// "u^T A u >= M for some u" therefore reduces to one norm evaluation, which
// this module demonstrates and cross-checks against brute force.

#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "matnorm/core.hpp"
#include "matnorm/norms.hpp"
#include "matnorm/spectral.hpp"

namespace matnorm {

class Graph {
public:
    using Edge = std::pair<std::size_t, std::size_t>;  // 0-based, first < second

    Graph(std::size_t n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
        if (n_ == 0) throw std::invalid_argument("Graph: need at least one vertex");
        for (const auto& [i, j] : edges_) {
            if (i >= j) throw std::invalid_argument("Graph: edges must satisfy i < j");
            if (j >= n_) throw std::invalid_argument("Graph: endpoint out of range");
        }
        for (std::size_t a = 0; a < edges_.size(); ++a)
            for (std::size_t b = a + 1; b < edges_.size(); ++b)
                if (edges_[a] == edges_[b])
                    throw std::invalid_argument("Graph: duplicate edge");
    }

    std::size_t vertex_count() const { return n_; }
    const std::vector<Edge>& edges() const { return edges_; }

private:
    std::size_t n_;
    std::vector<Edge> edges_;
};

// Structural MC check: square, exactly symmetric, diagonal exactly n,
// off-diagonal exactly 0 or -1.
inline bool is_mc(const Matrix& a) {
    if (a.rows() != a.cols()) return false;
    const std::size_t n = a.rows();
    const double dn = static_cast<double>(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (a(i, i) != dn) return false;
        for (std::size_t j = i + 1; j < n; ++j) {
            const double v = a(i, j);
            if (v != a(j, i)) return false;
            if (v != 0.0 && v != -1.0) return false;
        }
    }
    return true;
}

class McMatrix {
public:
    static McMatrix from_graph(const Graph& g) {
        const std::size_t n = g.vertex_count();
        std::vector<double> e(n * n, 0.0);
        for (std::size_t i = 0; i < n; ++i) e[i * n + i] = static_cast<double>(n);
        for (const auto& [i, j] : g.edges()) {
            e[i * n + j] = -1.0;
            e[j * n + i] = -1.0;
        }
        Matrix m(n, n, std::move(e));
        if (!is_mc(m))
            throw internal_error("McMatrix: construction violated the structural invariants");
        // Positive-definiteness is forced by diagonal dominance; a failed
        // check here points at the eigensolver, not the construction.
        if (jacobi_eigh(m).values.front() <= 0.0)
            throw internal_error("McMatrix: eigensolver reported a non-positive eigenvalue");
        return McMatrix(std::move(m));
    }

    const Matrix& inner() const { return inner_; }
    std::size_t size() const { return inner_.rows(); }

private:
    explicit McMatrix(Matrix m) : inner_(std::move(m)) {}
    Matrix inner_;
};

// Symmetric positive-definite S with S S = A.
inline Matrix sqrt_mc(const McMatrix& a) {
    return psd_sqrt(a.inner());
}

struct QuadraticMaxResult {
    double value;
    SignVector signs;
};

// Exact max of u^T A u over u in {-1,1}^n by plain enumeration with the
// first coordinate pinned to +1 (the form is even in u).  Fresh O(n^2)
// evaluation per candidate; this is the oracle side of the reduction, so it
// deliberately shares nothing with the Gray-code search.
inline QuadraticMaxResult quadratic_max_bruteforce(const Matrix& a) {
    detail::require_symmetric(a, "quadratic_max_bruteforce");
    const std::size_t n = a.rows();
    if (n > 24)
        throw guard_error("quadratic_max_bruteforce: refusing 2^" + std::to_string(n) +
                          " evaluations (limit 2^24)");

    std::vector<double> u(n);
    const std::uint64_t total = std::uint64_t{1} << (n - 1);
    double best = 0.0;
    std::uint64_t best_idx = 0;
    bool first = true;
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        u[0] = 1.0;
        for (std::size_t j = 1; j < n; ++j) u[j] = (idx >> (j - 1)) & 1u ? -1.0 : 1.0;
        double form = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            double row = 0.0;
            for (std::size_t j = 0; j < n; ++j) row += a(i, j) * u[j];
            form += u[i] * row;
        }
        if (first || form > best) {
            first = false;
            best = form;
            best_idx = idx;
        }
    }

    std::vector<double> signs(n);
    signs[0] = 1.0;
    for (std::size_t j = 1; j < n; ++j) signs[j] = (best_idx >> (j - 1)) & 1u ? -1.0 : 1.0;
    return {best, SignVector(std::move(signs))};
}

// The reduction itself: ||A^{1/2}||_{inf,2}^2 >= M decides the max-cut
// threshold.  The 1e-6 slack absorbs eigensolver rounding; the quadratic
// form takes integer values on sign vectors while M is an integer, so the
// true margin of a strict decision is at least 1 and the slack can never
// flip a correct answer.
inline bool decide_threshold_via_norm(const McMatrix& a, std::uint64_t threshold,
                                      const SignSearchOptions& opt = {}) {
    const double v = induced_norm(sqrt_mc(a), {NormIndex::Infinity, NormIndex::Two}, opt).value;
    const double m = static_cast<double>(threshold);
    return v * v >= m - 1e-6 * std::max(1.0, m);
}

}  // namespace matnorm
