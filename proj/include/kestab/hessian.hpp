/**
 * Block structure of the complex Hessian of a bi-invariant potential at a
 * chamber point x, from evaluation data (x, grad psi, Hess_R psi):
 *
 *   - one real r x r block equal to Hess_R(psi)/4,
 *   - per positive root alpha a Hermitian 2x2 block
 *         c_a * [[k_a, i], [-i, k_a]],  c_a = <alpha, grad>/2,  k_a = coth<alpha, x>.
 *
 * Since k_a > 1 on the open chamber, the 2x2 block eigenvalues c_a (k_a +- 1)
 * both carry the sign of c_a, so positivity reduces to the real block plus
 * the signs of the c_a. The Monge-Ampere density is the product of the block
 * determinants. This module is floating point (coth is transcendental);
 * positivity calls within `tol` of zero are reported indeterminate instead
 * of being classified.
 */
#ifndef KESTAB_HESSIAN_HPP
#define KESTAB_HESSIAN_HPP

#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "kestab/rational.hpp"
#include "kestab/rootsystem.hpp"

namespace kestab {

struct EvalPoint {
    std::vector<double> x;    ///< point of the open chamber
    std::vector<double> grad; ///< gradient of the associated potential at x
    std::vector<double> hess; ///< real Hessian at x, full row-major r x r
};

struct RootBlock {
    std::vector<double> root; ///< alpha in coordinates
    double c;                 ///< <alpha, grad>/2
    double k;                 ///< coth <alpha, x>, always > 1
    double wall_distance;     ///< <alpha, x>, positive on the open chamber
};

struct BlockHessian {
    std::size_t rank = 0;
    std::vector<double> real_block; ///< row-major rank x rank, Hess/4
    std::vector<RootBlock> root_blocks;

    std::size_t materialized_dim() const { return rank + 2 * root_blocks.size(); }
};

/// Throws std::domain_error when x is not strictly inside the chamber
/// (coth is singular on the walls) or on malformed evaluation data.
inline BlockHessian assemble(const RootSystem& rs, const EvalPoint& pt) {
    const std::size_t r = rs.rank;
    if (pt.x.size() != r || pt.grad.size() != r || pt.hess.size() != r * r)
        throw std::invalid_argument("assemble: evaluation data has wrong arity");
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = i + 1; j < r; ++j)
            if (pt.hess[i * r + j] != pt.hess[j * r + i])
                throw std::invalid_argument("assemble: Hessian not symmetric");

    BlockHessian bh;
    bh.rank = r;
    bh.real_block.resize(r * r);
    for (std::size_t i = 0; i < r * r; ++i) bh.real_block[i] = pt.hess[i] / 4.0;
    for (const auto& alpha : rs.positive_roots) {
        double ax = 0, ag = 0;
        std::vector<double> a(r);
        for (std::size_t i = 0; i < r; ++i) {
            a[i] = to_double(alpha[i]);
            ax += a[i] * pt.x[i];
            ag += a[i] * pt.grad[i];
        }
        if (!(ax > 0))
            throw std::domain_error("assemble: point is on or outside a Weyl wall");
        bh.root_blocks.push_back({std::move(a), ag / 2.0, 1.0 / std::tanh(ax), ax});
    }
    return bh;
}

enum class Positivity { Positive, NotPositive, Indeterminate };

/// Positivity of the whole block matrix: Cholesky on the real block and the
/// sign of every c_a. Pivots or c_a within tol of zero give Indeterminate.
inline Positivity classify_positivity(const BlockHessian& bh, double tol = 1e-12) {
    const std::size_t r = bh.rank;
    bool indeterminate = false;
    std::vector<double> chol(bh.real_block);
    for (std::size_t i = 0; i < r; ++i) {
        double d = chol[i * r + i];
        for (std::size_t k = 0; k < i; ++k) d -= chol[i * r + k] * chol[i * r + k];
        if (d < -tol) return Positivity::NotPositive;
        if (d <= tol) {
            indeterminate = true;
            break; // cannot factor further, remaining pivots unknown
        }
        const double root = std::sqrt(d);
        chol[i * r + i] = root;
        for (std::size_t j = i + 1; j < r; ++j) {
            double s = chol[j * r + i];
            for (std::size_t k = 0; k < i; ++k) s -= chol[j * r + k] * chol[i * r + k];
            chol[j * r + i] = s / root;
        }
    }
    for (const auto& b : bh.root_blocks) {
        if (b.c < -tol) return Positivity::NotPositive;
        if (b.c <= tol) indeterminate = true;
    }
    return indeterminate ? Positivity::Indeterminate : Positivity::Positive;
}

inline bool is_positive_definite(const BlockHessian& bh, double tol = 1e-12) {
    return classify_positivity(bh, tol) == Positivity::Positive;
}

/// Determinant of the block matrix: det(real block) * prod c_a^2 (k_a^2 - 1).
inline double ma_density(const BlockHessian& bh) {
    const std::size_t r = bh.rank;
    std::vector<double> lu(bh.real_block);
    double det = 1.0;
    for (std::size_t k = 0; k < r; ++k) {
        std::size_t p = k;
        for (std::size_t i = k + 1; i < r; ++i)
            if (std::fabs(lu[i * r + k]) > std::fabs(lu[p * r + k])) p = i;
        if (lu[p * r + k] == 0.0) { det = 0.0; break; }
        if (p != k) {
            for (std::size_t j = 0; j < r; ++j) std::swap(lu[p * r + j], lu[k * r + j]);
            det = -det;
        }
        det *= lu[k * r + k];
        for (std::size_t i = k + 1; i < r; ++i) {
            const double f = lu[i * r + k] / lu[k * r + k];
            for (std::size_t j = k; j < r; ++j) lu[i * r + j] -= f * lu[k * r + j];
        }
    }
    // coth^2 t - 1 = 1/sinh^2 t, evaluated from the wall distance so the
    // factor keeps full relative precision far from the walls
    for (const auto& b : bh.root_blocks) {
        const double s = std::sinh(b.wall_distance);
        det *= (b.c / s) * (b.c / s);
    }
    return det;
}

/// The dense Hermitian matrix the blocks describe, row-major, dimension
/// rank + 2 * (number of roots). The +-i pattern sits on the off-diagonal
/// of each 2x2 root block.
inline std::vector<std::complex<double>> materialize(const BlockHessian& bh) {
    const std::size_t n = bh.materialized_dim();
    std::vector<std::complex<double>> m(n * n, 0.0);
    for (std::size_t i = 0; i < bh.rank; ++i)
        for (std::size_t j = 0; j < bh.rank; ++j)
            m[i * n + j] = bh.real_block[i * bh.rank + j];
    std::size_t off = bh.rank;
    for (const auto& b : bh.root_blocks) {
        m[off * n + off] = b.c * b.k;
        m[off * n + off + 1] = std::complex<double>(0.0, b.c);
        m[(off + 1) * n + off] = std::complex<double>(0.0, -b.c);
        m[(off + 1) * n + off + 1] = b.c * b.k;
        off += 2;
    }
    return m;
}

} // namespace kestab

#endif // KESTAB_HESSIAN_HPP
