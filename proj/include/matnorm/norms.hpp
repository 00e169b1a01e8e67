// norms.hpp - closed forms for the nine induced (p,q) matrix norms with
// p, q in {1, 2, inf}, each returning the value together with a unit-p-norm
// witness vector that achieves it.
//
// Routing:
//   (1,q)            max_column_norm   max_j ||col_j||_q, witness e_k
//   (2,1)            two_one_norm      max_u ||A^T u||_2 over u in {-1,1}^m
//   (2,2)            spectral_norm     sqrt(lambda_max(A^T A))
//   (2,inf)          max_row_norm(2)   max_a ||row_a||_2, witness row/||row||
//   (inf,1),(inf,2)  sign_maximized    max_u ||A u||_q over u in {-1,1}^n
//   (inf,inf)        max_row_norm(1)   max_a ||row_a||_1, witness row signs
//
// Max reductions compare with plain > on finite doubles, so ties break
// toward the lowest column/row/visitation index.  A zero matrix reports
// value 0 with witness e_1.

#pragma once

#include "matnorm/core.hpp"
#include "matnorm/sign_search.hpp"
#include "matnorm/spectral.hpp"

namespace matnorm {

struct NormResult {
    double value;
    Vector witness;  // length n, ||witness||_p = 1 (e_1 for the zero matrix)
    NormPair pair;
};

// (1,q): the 1-ball is the convex hull of {+-e_k}, so a basis vector
// maximizes.  Covers (1,1), (1,2) and the max|A_aj| form of (1,inf).
inline NormResult max_column_norm(const Matrix& a, NormIndex q) {
    const std::size_t n = a.cols(), m = a.rows();
    std::vector<double> column(m);
    double best = -1.0;
    std::size_t best_j = 0;
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < m; ++i) column[i] = a(i, j);
        const double v = vec_norm(std::span<const double>(column), q);
        if (v > best) {
            best = v;
            best_j = j;
        }
    }
    return {best, basis_vector(n, best_j), {NormIndex::One, q}};
}

// r = 2 gives (2,inf): the maximizing x is collinear with the largest row.
// r = 1 gives (inf,inf): the row's sign pattern realizes its 1-norm.
inline NormResult max_row_norm(const Matrix& a, NormIndex r) {
    if (r == NormIndex::Infinity)
        throw std::invalid_argument("max_row_norm: r must be the 1- or 2-norm");
    const std::size_t n = a.cols(), m = a.rows();
    double best = -1.0;
    std::size_t best_a = 0;
    for (std::size_t i = 0; i < m; ++i) {
        double v = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            const double e = a(i, j);
            v += (r == NormIndex::Two) ? e * e : std::abs(e);
        }
        if (r == NormIndex::Two) v = std::sqrt(v);
        if (v > best) {
            best = v;
            best_a = i;
        }
    }

    const NormPair pair{r == NormIndex::Two ? NormIndex::Two : NormIndex::Infinity,
                        NormIndex::Infinity};
    if (best == 0.0) return {0.0, basis_vector(n, 0), pair};

    std::vector<double> w(n);
    if (r == NormIndex::Two) {
        for (std::size_t j = 0; j < n; ++j) w[j] = a(best_a, j) / best;
    } else {
        for (std::size_t j = 0; j < n; ++j) w[j] = a(best_a, j) >= 0.0 ? 1.0 : -1.0;
    }
    return {best, Vector(std::move(w)), pair};
}

// (2,2): largest singular value, witness the top eigenvector of A^T A.
inline NormResult spectral_norm(const Matrix& a) {
    auto [lambda, v] = max_eigenpair(gram(a));
    const double value = lambda > 0.0 ? std::sqrt(lambda) : 0.0;
    const NormPair pair{NormIndex::Two, NormIndex::Two};
    if (value == 0.0) return {0.0, basis_vector(a.cols(), 0), pair};
    return {value, std::move(v), pair};
}

// (inf,1) and (inf,2): the inf-ball is the convex hull of {-1,1}^n, so a
// sign vector maximizes; delegated to the Gray-code search.
inline NormResult sign_maximized_norm(const Matrix& a, NormIndex q,
                                      const SignSearchOptions& opt = {}) {
    SignSearchResult r = maximize_signs(a, q, opt);
    const NormPair pair{NormIndex::Infinity, q};
    if (r.value == 0.0) return {0.0, basis_vector(a.cols(), 0), pair};
    return {r.value, r.signs.to_vector(), pair};
}

// (2,1): max_u ||A^T u||_2 over u in {-1,1}^m, the same code path as the
// (inf,2) norm of A^T.  The witness pulls back as A^T u* renormalized.
inline NormResult two_one_norm(const Matrix& a, const SignSearchOptions& opt = {}) {
    const Matrix at = transpose(a);
    SignSearchResult r = maximize_signs(at, NormIndex::Two, opt);
    const NormPair pair{NormIndex::Two, NormIndex::One};
    if (r.value == 0.0) return {0.0, basis_vector(a.cols(), 0), pair};

    std::vector<double> w(at.rows());
    matvec_into(at, r.signs.entries(), w);
    for (auto& x : w) x /= r.value;
    return {r.value, Vector(std::move(w)), pair};
}

inline NormResult induced_norm(const Matrix& a, NormPair pair,
                               const SignSearchOptions& opt = {}) {
    using N = NormIndex;
    switch (pair.p) {
        case N::One:
            return max_column_norm(a, pair.q);
        case N::Two:
            switch (pair.q) {
                case N::One: return two_one_norm(a, opt);
                case N::Two: return spectral_norm(a);
                case N::Infinity: return max_row_norm(a, N::Two);
            }
            break;
        case N::Infinity:
            switch (pair.q) {
                case N::One: return sign_maximized_norm(a, N::One, opt);
                case N::Two: return sign_maximized_norm(a, N::Two, opt);
                case N::Infinity: return max_row_norm(a, N::One);
            }
            break;
    }
    throw std::invalid_argument("induced_norm: invalid norm pair");
}

}  // namespace matnorm
