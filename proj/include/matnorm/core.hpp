// core.hpp - dense vector/matrix values and the three elementary vector norms.
//
// Vectors and matrices are immutable after construction and validate their
// entries (finite binary64 only), so downstream max/compare logic never has
// to reason about NaN ordering.  Storage is row-major.  All public indices
// are 0-based; the CLI layer renders 1-based positions for humans.

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace matnorm {

// ---------------------------------------------------------------------------
// Error taxonomy.  The CLI maps these onto distinct exit codes.
// ---------------------------------------------------------------------------

// Refusal to start an enumeration whose cost exceeds the configured guard.
struct guard_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An iterative solver failed to reach its tolerance within its budget.
struct convergence_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A matrix required to be positive-semidefinite has a genuinely negative
// eigenvalue (beyond the rounding clamp).
struct not_psd_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An invariant that should hold by construction was observed to fail.
struct internal_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed text input; carries the 1-based line/column of the offence.
struct parse_error : std::runtime_error {
    parse_error(const std::string& what, std::size_t line_no, std::size_t column_no)
        : std::runtime_error("line " + std::to_string(line_no) + ", column " +
                             std::to_string(column_no) + ": " + what),
          line(line_no),
          column(column_no) {}

    std::size_t line;
    std::size_t column;
};

namespace detail {

inline void require_finite(std::span<const double> entries, const char* what) {
    for (double v : entries) {
        if (!std::isfinite(v))
            throw std::invalid_argument(std::string(what) + ": entries must be finite");
    }
}

}  // namespace detail

// ---------------------------------------------------------------------------
// NormIndex: the three vector norms handled by the library.
// ---------------------------------------------------------------------------

enum class NormIndex { One, Two, Infinity };

inline const char* to_string(NormIndex p) {
    switch (p) {
        case NormIndex::One: return "1";
        case NormIndex::Two: return "2";
        case NormIndex::Infinity: return "inf";
    }
    return "?";
}

struct NormPair {
    NormIndex p;  // domain norm
    NormIndex q;  // codomain norm

    friend bool operator==(const NormPair&, const NormPair&) = default;
};

inline constexpr std::array<NormPair, 9> all_norm_pairs() {
    using N = NormIndex;
    return {{{N::One, N::One},
             {N::One, N::Two},
             {N::One, N::Infinity},
             {N::Two, N::One},
             {N::Two, N::Two},
             {N::Two, N::Infinity},
             {N::Infinity, N::One},
             {N::Infinity, N::Two},
             {N::Infinity, N::Infinity}}};
}

// ---------------------------------------------------------------------------
// Vector
// ---------------------------------------------------------------------------

class Vector {
public:
    explicit Vector(std::size_t n) : entries_(n, 0.0) {
        if (n == 0) throw std::invalid_argument("Vector: length must be positive");
    }

    Vector(std::initializer_list<double> init) : entries_(init) {
        if (entries_.empty()) throw std::invalid_argument("Vector: length must be positive");
        detail::require_finite(entries_, "Vector");
    }

    explicit Vector(std::vector<double> entries) : entries_(std::move(entries)) {
        if (entries_.empty()) throw std::invalid_argument("Vector: length must be positive");
        detail::require_finite(entries_, "Vector");
    }

    std::size_t size() const { return entries_.size(); }
    double operator[](std::size_t i) const { return entries_[i]; }
    const std::vector<double>& entries() const { return entries_; }

    auto begin() const { return entries_.begin(); }
    auto end() const { return entries_.end(); }

    friend bool operator==(const Vector&, const Vector&) = default;

private:
    std::vector<double> entries_;
};

// ---------------------------------------------------------------------------
// Matrix (row-major, m x n, immutable)
// ---------------------------------------------------------------------------

class Matrix {
public:
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols, 0.0) {
        if (rows == 0 || cols == 0)
            throw std::invalid_argument("Matrix: dimensions must be positive");
    }

    Matrix(std::size_t rows, std::size_t cols, std::vector<double> entries)
        : rows_(rows), cols_(cols), entries_(std::move(entries)) {
        if (rows == 0 || cols == 0)
            throw std::invalid_argument("Matrix: dimensions must be positive");
        if (entries_.size() != rows * cols)
            throw std::invalid_argument("Matrix: entry count does not match dimensions");
        detail::require_finite(entries_, "Matrix");
    }

    Matrix(std::initializer_list<std::initializer_list<double>> rows)
        : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
        if (rows_ == 0 || cols_ == 0)
            throw std::invalid_argument("Matrix: dimensions must be positive");
        entries_.reserve(rows_ * cols_);
        for (const auto& r : rows) {
            if (r.size() != cols_)
                throw std::invalid_argument("Matrix: ragged initializer");
            entries_.insert(entries_.end(), r.begin(), r.end());
        }
        detail::require_finite(entries_, "Matrix");
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.entries_[i * n + i] = 1.0;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    double operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
    const std::vector<double>& entries() const { return entries_; }

    Vector row(std::size_t a) const {
        if (a >= rows_) throw std::out_of_range("Matrix::row: index out of range");
        return Vector(std::vector<double>(entries_.begin() + a * cols_,
                                          entries_.begin() + (a + 1) * cols_));
    }

    Vector col(std::size_t j) const {
        if (j >= cols_) throw std::out_of_range("Matrix::col: index out of range");
        std::vector<double> c(rows_);
        for (std::size_t i = 0; i < rows_; ++i) c[i] = entries_[i * cols_ + j];
        return Vector(std::move(c));
    }

    double frobenius_norm() const {
        double s = 0.0;
        for (double v : entries_) s += v * v;
        return std::sqrt(s);
    }

    bool is_zero() const {
        return std::all_of(entries_.begin(), entries_.end(), [](double v) { return v == 0.0; });
    }

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_, cols_;
    std::vector<double> entries_;
};

// ---------------------------------------------------------------------------
// Vector norms
// ---------------------------------------------------------------------------

inline double vec_norm(std::span<const double> x, NormIndex p) {
    switch (p) {
        case NormIndex::One: {
            double s = 0.0;
            for (double v : x) s += std::abs(v);
            return s;
        }
        case NormIndex::Two: {
            double s = 0.0;
            for (double v : x) s += v * v;
            return std::sqrt(s);
        }
        case NormIndex::Infinity: {
            double m = 0.0;
            for (double v : x) m = std::max(m, std::abs(v));
            return m;
        }
    }
    return 0.0;
}

inline double vec_norm(const Vector& v, NormIndex p) {
    return vec_norm(std::span<const double>(v.entries()), p);
}

// Two-pass 2-norm that rescales by the max entry first.  The plain 2-norm
// above squares entries directly and overflows past ~1e154; this variant
// stays finite for any finite input.
inline double two_norm_scaled(std::span<const double> x) {
    double m = 0.0;
    for (double v : x) m = std::max(m, std::abs(v));
    if (m == 0.0) return 0.0;
    double s = 0.0;
    for (double v : x) {
        const double r = v / m;
        s += r * r;
    }
    return m * std::sqrt(s);
}

inline double two_norm_scaled(const Vector& v) {
    return two_norm_scaled(std::span<const double>(v.entries()));
}

// ---------------------------------------------------------------------------
// Basic linear-algebra verbs
// ---------------------------------------------------------------------------

inline void matvec_into(const Matrix& a, std::span<const double> x, std::span<double> out) {
    const std::size_t m = a.rows(), n = a.cols();
    const double* e = a.entries().data();
    for (std::size_t i = 0; i < m; ++i) {
        double s = 0.0;
        const double* r = e + i * n;
        for (std::size_t j = 0; j < n; ++j) s += r[j] * x[j];
        out[i] = s;
    }
}

inline Vector matvec(const Matrix& a, const Vector& x) {
    if (x.size() != a.cols())
        throw std::invalid_argument("matvec: vector length does not match column count");
    std::vector<double> out(a.rows());
    matvec_into(a, x.entries(), out);
    return Vector(std::move(out));
}

inline Matrix transpose(const Matrix& a) {
    const std::size_t m = a.rows(), n = a.cols();
    std::vector<double> t(n * m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) t[j * m + i] = a(i, j);
    return Matrix(n, m, std::move(t));
}

inline Vector basis_vector(std::size_t n, std::size_t k) {
    if (k >= n) throw std::out_of_range("basis_vector: index out of range");
    std::vector<double> e(n, 0.0);
    e[k] = 1.0;
    return Vector(std::move(e));
}

// A^T A with the lower triangle copied from the upper one, so the result is
// symmetric to the last bit.
inline Matrix gram(const Matrix& a) {
    const std::size_t m = a.rows(), n = a.cols();
    std::vector<double> g(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            double s = 0.0;
            for (std::size_t k = 0; k < m; ++k) s += a(k, i) * a(k, j);
            g[i * n + j] = s;
            g[j * n + i] = s;
        }
    }
    return Matrix(n, n, std::move(g));
}

// ---------------------------------------------------------------------------
// Arithmetic
// ---------------------------------------------------------------------------

inline Vector operator+(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vector +: length mismatch");
    std::vector<double> r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return Vector(std::move(r));
}

inline Vector operator-(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vector -: length mismatch");
    std::vector<double> r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return Vector(std::move(r));
}

inline Vector operator*(double c, const Vector& a) {
    std::vector<double> r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
    return Vector(std::move(r));
}

inline Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("matrix +: shape mismatch");
    std::vector<double> r(a.entries().size());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.entries()[i] + b.entries()[i];
    return Matrix(a.rows(), a.cols(), std::move(r));
}

inline Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("matrix -: shape mismatch");
    std::vector<double> r(a.entries().size());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.entries()[i] - b.entries()[i];
    return Matrix(a.rows(), a.cols(), std::move(r));
}

inline Matrix operator*(double c, const Matrix& a) {
    std::vector<double> r(a.entries().size());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = c * a.entries()[i];
    return Matrix(a.rows(), a.cols(), std::move(r));
}

inline Matrix matmul(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matmul: shape mismatch");
    const std::size_t m = a.rows(), k = a.cols(), n = b.cols();
    std::vector<double> r(m * n, 0.0);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t l = 0; l < k; ++l) {
            const double ail = a(i, l);
            for (std::size_t j = 0; j < n; ++j) r[i * n + j] += ail * b(l, j);
        }
    return Matrix(m, n, std::move(r));
}

}  // namespace matnorm
