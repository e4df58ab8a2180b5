/**
 * Test-only oracles and generators, kept independent of the library's
 * computation paths: cofactor determinants, complex LU determinants for the
 * materialized Hessian, a Jacobi eigensolver for Hermitian matrices via the
 * real-symmetric embedding, and seeded random rational/chamber-point
 * generators.
 */
#ifndef KESTAB_TESTS_HELPERS_HPP
#define KESTAB_TESTS_HELPERS_HPP

#include <cmath>
#include <complex>
#include <cstddef>
#include <random>
#include <vector>

#include "kestab/kestab.hpp"

namespace kestab::testing {

/// Determinant by cofactor expansion along the first row. Independent of
/// the Bareiss path in the library.
inline Rational cofactor_det(const RatMatrix& m) {
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    if (n == 1) return m(0, 0);
    Rational total = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if (m(0, j) == 0) continue;
        RatMatrix minor(n - 1, n - 1);
        for (std::size_t i = 1; i < n; ++i) {
            std::size_t cc = 0;
            for (std::size_t c = 0; c < n; ++c) {
                if (c == j) continue;
                minor(i - 1, cc++) = m(i, c);
            }
        }
        const Rational term = m(0, j) * cofactor_det(minor);
        total += (j % 2 == 0) ? term : -term;
    }
    return total;
}

/// |det| of a dense complex matrix by LU with partial pivoting.
inline std::complex<double> complex_det(std::vector<std::complex<double>> a, std::size_t n) {
    std::complex<double> det = 1.0;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        for (std::size_t i = k + 1; i < n; ++i)
            if (std::abs(a[i * n + k]) > std::abs(a[p * n + k])) p = i;
        if (std::abs(a[p * n + k]) == 0.0) return 0.0;
        if (p != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a[p * n + j], a[k * n + j]);
            det = -det;
        }
        det *= a[k * n + k];
        for (std::size_t i = k + 1; i < n; ++i) {
            const std::complex<double> f = a[i * n + k] / a[k * n + k];
            for (std::size_t j = k; j < n; ++j) a[i * n + j] -= f * a[k * n + j];
        }
    }
    return det;
}

/// Eigenvalues of a real symmetric matrix by cyclic Jacobi rotations.
inline std::vector<double> jacobi_eigenvalues(std::vector<double> a, std::size_t n) {
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) off += a[i * n + j] * a[i * n + j];
        if (off < 1e-26) break;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) {
                if (std::fabs(a[p * n + q]) < 1e-300) continue;
                const double theta = (a[q * n + q] - a[p * n + p]) / (2 * a[p * n + q]);
                const double t = (theta >= 0 ? 1.0 : -1.0) /
                                 (std::fabs(theta) + std::sqrt(theta * theta + 1));
                const double c = 1.0 / std::sqrt(t * t + 1), s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    const double akp = a[k * n + p], akq = a[k * n + q];
                    a[k * n + p] = c * akp - s * akq;
                    a[k * n + q] = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double apk = a[p * n + k], aqk = a[q * n + k];
                    a[p * n + k] = c * apk - s * aqk;
                    a[q * n + k] = s * apk + c * aqk;
                }
            }
    }
    std::vector<double> eig(n);
    for (std::size_t i = 0; i < n; ++i) eig[i] = a[i * n + i];
    return eig;
}

/// Eigenvalues of a Hermitian matrix H = A + iB through the real symmetric
/// embedding [[A, -B], [B, A]] (each eigenvalue of H appears twice).
inline std::vector<double> hermitian_eigenvalues(const std::vector<std::complex<double>>& h,
                                                 std::size_t n) {
    std::vector<double> em(4 * n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const double re = h[i * n + j].real(), im = h[i * n + j].imag();
            em[i * 2 * n + j] = re;
            em[(i + n) * 2 * n + (j + n)] = re;
            em[i * 2 * n + (j + n)] = -im;
            em[(i + n) * 2 * n + j] = im;
        }
    return jacobi_eigenvalues(std::move(em), 2 * n);
}

struct Rng {
    std::mt19937_64 gen;
    explicit Rng(std::uint64_t seed) : gen(seed) {}

    long long integer(long long lo, long long hi) {
        return std::uniform_int_distribution<long long>(lo, hi)(gen);
    }
    /// Positive rational p/q with p in [1..pmax], q in [1..qmax].
    Rational positive_rational(long long pmax = 20, long long qmax = 12) {
        return make_rational(integer(1, pmax), integer(1, qmax));
    }
    Rational rational(long long lo = -10, long long hi = 10, long long qmax = 8) {
        long long p = integer(lo, hi);
        return make_rational(p, integer(1, qmax));
    }
    RatVector vector(std::size_t n, long long lo = -10, long long hi = 10) {
        RatVector v(n);
        for (std::size_t i = 0; i < n; ++i) v[i] = rational(lo, hi);
        return v;
    }
    double real(double lo, double hi) {
        return std::uniform_real_distribution<double>(lo, hi)(gen);
    }
    /// Random point strictly inside the open chamber of rs, with every wall
    /// distance <alpha, x> inside [lo, hi]. The upper bound matters for the
    /// dense-determinant cross-check: the materialized block entries are
    /// (c coth t, c i), so any determinant taken from them carries a
    /// cancellation error ~eps/(coth^2 t - 1) ~ eps e^{2t}/4, and t <= 6
    /// keeps that two orders below the 1e-10 tolerance.
    std::vector<double> chamber_point(const RootSystem& rs, double lo = 1e-3,
                                      double hi = 1e9) {
        while (true) {
            std::vector<double> x(rs.rank);
            for (auto& c : x) c = real(-5.0, 5.0);
            bool inside = true;
            for (const auto& alpha : rs.positive_roots) {
                double s = 0;
                for (std::size_t i = 0; i < rs.rank; ++i) s += to_double(alpha[i]) * x[i];
                if (s < lo || s > hi) { inside = false; break; }
            }
            if (inside) return x;
        }
    }

    /// Random symmetric 2x2 with determinant bounded away from zero
    /// (row-major, |ad - b^2| >= 0.09), sometimes indefinite.
    std::vector<double> conditioned_hessian_2d() {
        const double a = (integer(0, 1) ? 1 : -1) * real(0.5, 2.0);
        const double d = (integer(0, 1) ? 1 : -1) * real(0.5, 2.0);
        const double b = real(-0.4, 0.4);
        return {a, b, b, d};
    }
};

/// Both cone descriptions cut out the same set (rank <= 3, pointed cones):
/// generators satisfy all facets, and every ray of the facet system lies in
/// the generated cone.
inline bool cone_descriptions_agree(const Cone& c, std::size_t rank) {
    for (const auto& g : c.generators)
        for (const auto& n : c.facet_normals)
            if (dot(n, g) < 0) return false;
    for (const auto& ray : rays_from_normals(c.facet_normals, rank))
        if (!in_generated_cone(ray, c.generators)) return false;
    return true;
}

} // namespace kestab::testing

#endif // KESTAB_TESTS_HELPERS_HPP
