/**
 * Small dense exact linear algebra on Rational entries.
 *
 * RatVector / RatMatrix are plain value types; everything here targets the
 * tiny systems that show up in vertex enumeration and Weyl reflections
 * (dimension <= 6), so the solvers are Bareiss fraction-free elimination
 * with no asymptotic ambitions.
 */
#ifndef KESTAB_LINALG_HPP
#define KESTAB_LINALG_HPP

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "kestab/rational.hpp"

namespace kestab {

struct SingularMatrixError : std::domain_error {
    SingularMatrixError() : std::domain_error("matrix is singular") {}
};

class RatVector {
public:
    RatVector() = default;
    explicit RatVector(std::size_t n) : entries_(n) {}
    RatVector(std::initializer_list<Rational> init) : entries_(init) {}
    explicit RatVector(std::vector<Rational> entries) : entries_(std::move(entries)) {}

    /// Convenience for integer coordinate data.
    static RatVector of_ints(std::initializer_list<long long> init) {
        std::vector<Rational> e;
        e.reserve(init.size());
        for (long long v : init) e.emplace_back(v);
        return RatVector(std::move(e));
    }

    std::size_t size() const { return entries_.size(); }
    const Rational& operator[](std::size_t i) const { return entries_[i]; }
    Rational& operator[](std::size_t i) { return entries_[i]; }
    auto begin() const { return entries_.begin(); }
    auto end() const { return entries_.end(); }

    bool is_zero() const {
        return std::all_of(entries_.begin(), entries_.end(),
                           [](const Rational& q) { return q == 0; });
    }

    bool is_integral() const {
        return std::all_of(entries_.begin(), entries_.end(),
                           [](const Rational& q) { return denominator(q) == 1; });
    }

    friend bool operator==(const RatVector& a, const RatVector& b) {
        return a.entries_ == b.entries_;
    }
    /// Lexicographic; used for canonical vertex ordering.
    friend bool operator<(const RatVector& a, const RatVector& b) {
        return std::lexicographical_compare(a.entries_.begin(), a.entries_.end(),
                                            b.entries_.begin(), b.entries_.end());
    }

    friend RatVector operator+(const RatVector& a, const RatVector& b) {
        check_same_size(a, b);
        RatVector r(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
        return r;
    }
    friend RatVector operator-(const RatVector& a, const RatVector& b) {
        check_same_size(a, b);
        RatVector r(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
        return r;
    }
    friend RatVector operator-(const RatVector& a) {
        RatVector r(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
        return r;
    }
    friend RatVector operator*(const Rational& s, const RatVector& a) {
        RatVector r(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) r[i] = s * a[i];
        return r;
    }

private:
    static void check_same_size(const RatVector& a, const RatVector& b) {
        if (a.size() != b.size())
            throw std::invalid_argument("vector size mismatch");
    }

    std::vector<Rational> entries_;
};

inline Rational dot(const RatVector& a, const RatVector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: size mismatch");
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline std::string format_vector(const RatVector& v, char sep = ' ') {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += sep;
        s += format_rational(v[i]);
    }
    return s;
}

class RatMatrix {
public:
    RatMatrix() : rows_(0), cols_(0) {}
    RatMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}

    static RatMatrix identity(std::size_t n) {
        RatMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    /// Rows stacked from a list of vectors (all the same length).
    static RatMatrix from_rows(const std::vector<RatVector>& rows) {
        if (rows.empty()) return RatMatrix();
        RatMatrix m(rows.size(), rows[0].size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != m.cols_)
                throw std::invalid_argument("from_rows: ragged rows");
            for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    const Rational& operator()(std::size_t i, std::size_t j) const {
        return entries_[i * cols_ + j];
    }
    Rational& operator()(std::size_t i, std::size_t j) {
        return entries_[i * cols_ + j];
    }

    friend bool operator==(const RatMatrix& a, const RatMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
    }

    friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("matmul: shape mismatch");
        RatMatrix r(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                if (a(i, k) == 0) continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    r(i, j) += a(i, k) * b(k, j);
            }
        return r;
    }

    friend RatVector operator*(const RatMatrix& a, const RatVector& v) {
        if (a.cols_ != v.size()) throw std::invalid_argument("matvec: shape mismatch");
        RatVector r(a.rows_);
        for (std::size_t i = 0; i < a.rows_; ++i) {
            Rational s = 0;
            for (std::size_t j = 0; j < a.cols_; ++j) s += a(i, j) * v[j];
            r[i] = s;
        }
        return r;
    }

private:
    std::size_t rows_, cols_;
    std::vector<Rational> entries_;
};

/// Rank of the row space, by elimination. Exact.
inline std::size_t rat_rank(RatMatrix m) {
    std::size_t rank = 0;
    for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
        std::size_t pivot = rank;
        while (pivot < m.rows() && m(pivot, col) == 0) ++pivot;
        if (pivot == m.rows()) continue;
        if (pivot != rank)
            for (std::size_t j = 0; j < m.cols(); ++j)
                std::swap(m(pivot, j), m(rank, j));
        for (std::size_t i = rank + 1; i < m.rows(); ++i) {
            if (m(i, col) == 0) continue;
            const Rational f = m(i, col) / m(rank, col);
            for (std::size_t j = col; j < m.cols(); ++j)
                m(i, j) -= f * m(rank, j);
        }
        ++rank;
    }
    return rank;
}

/// Exact determinant by Bareiss fraction-free elimination.
/// Throws std::invalid_argument for non-square input.
inline Rational rat_det(RatMatrix m) {
    if (!m.is_square()) throw std::invalid_argument("rat_det: matrix not square");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    Rational sign = 1;
    Rational prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && m(p, k) == 0) ++p;
            if (p == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
            m(i, k) = 0;
        }
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

/// Exact solve of m x = b; std::nullopt when m is singular.
inline std::optional<RatVector> rat_try_solve(RatMatrix m, RatVector b) {
    if (!m.is_square()) throw std::invalid_argument("rat_solve: matrix not square");
    const std::size_t n = m.rows();
    if (b.size() != n) throw std::invalid_argument("rat_solve: rhs size mismatch");
    // forward elimination on the augmented system
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && m(p, k) == 0) ++p;
        if (p == n) return std::nullopt;
        if (p != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
            std::swap(b[k], b[p]);
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            if (m(i, k) == 0) continue;
            const Rational f = m(i, k) / m(k, k);
            for (std::size_t j = k; j < n; ++j) m(i, j) -= f * m(k, j);
            b[i] -= f * b[k];
        }
    }
    RatVector x(n);
    for (std::size_t ii = n; ii-- > 0;) {
        Rational s = b[ii];
        for (std::size_t j = ii + 1; j < n; ++j) s -= m(ii, j) * x[j];
        x[ii] = s / m(ii, ii);
    }
    return x;
}

/// As rat_try_solve but throws SingularMatrixError on a singular system.
inline RatVector rat_solve(const RatMatrix& m, const RatVector& b) {
    auto x = rat_try_solve(m, b);
    if (!x) throw SingularMatrixError();
    return *x;
}

/// Integer vector divided by the gcd of its absolute entries; direction kept.
/// Requires a nonzero vector with integral entries.
inline RatVector primitive(const RatVector& v) {
    if (v.is_zero()) throw std::domain_error("primitive: zero vector");
    if (!v.is_integral()) throw std::domain_error("primitive: non-integral entries");
    Int g = 0;
    for (const Rational& q : v) g = boost::multiprecision::gcd(g, abs(numerator(q)));
    RatVector r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = Rational(numerator(v[i]) / g);
    return r;
}

/// Scales a rational vector to primitive integer form, preserving direction.
inline RatVector primitive_direction(const RatVector& v) {
    if (v.is_zero()) throw std::domain_error("primitive_direction: zero vector");
    Int lcm = 1;
    for (const Rational& q : v) lcm = boost::multiprecision::lcm(lcm, denominator(q));
    RatVector scaled(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) scaled[i] = v[i] * Rational(lcm);
    return primitive(scaled);
}

/// True when a = c b for some c > 0.
inline bool same_direction(const RatVector& a, const RatVector& b) {
    if (a.is_zero() || b.is_zero()) return false;
    return primitive_direction(a) == primitive_direction(b);
}

inline bool parallel(const RatVector& a, const RatVector& b) {
    return same_direction(a, b) || same_direction(a, -b);
}

} // namespace kestab

#endif // KESTAB_LINALG_HPP
