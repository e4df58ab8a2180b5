/**
 * Polyhedral cones with apex at the origin, rank <= 3, exact arithmetic.
 *
 * A Cone carries both descriptions: facet inequalities <n, y> >= 0 and
 * extreme-ray generators. Conversions are brute-force over small subsets
 * (Caratheodory bounds the search), which is all the rank-2/3 instances
 * here ever need.
 */
#ifndef KESTAB_CONE_HPP
#define KESTAB_CONE_HPP

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "kestab/linalg.hpp"

namespace kestab {

struct Cone {
    std::vector<RatVector> facet_normals; ///< inequalities <n, y> >= 0
    std::vector<RatVector> generators;    ///< extreme rays, primitive integer form
};

namespace detail {

/// All k-element index subsets of {0..n-1}, visited in lexicographic order.
template <typename F>
void for_each_subset(std::size_t n, std::size_t k, F&& visit) {
    if (k > n) return;
    if (k == 0) {
        visit(std::vector<std::size_t>{});
        return;
    }
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        visit(static_cast<const std::vector<std::size_t>&>(idx));
        std::size_t i = k;
        while (i-- > 0) {
            if (idx[i] != i + n - k) break;
            if (i == 0) return;
        }
        if (idx[i] == i + n - k) return;
        ++idx[i];
        for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

/// Nonzero kernel direction of the (r-1) x r row system, or empty if the
/// rows are dependent. r <= 3.
inline RatVector kernel_direction(const std::vector<RatVector>& rows, std::size_t r) {
    if (r == 1) return RatVector{Rational(1)};
    if (r == 2) {
        const RatVector& n = rows[0];
        RatVector d{-n[1], n[0]};
        return d.is_zero() ? RatVector() : d;
    }
    if (r == 3) {
        const RatVector &a = rows[0], &b = rows[1];
        RatVector d{a[1] * b[2] - a[2] * b[1],
                    a[2] * b[0] - a[0] * b[2],
                    a[0] * b[1] - a[1] * b[0]};
        return d.is_zero() ? RatVector() : d;
    }
    throw std::invalid_argument("kernel_direction: rank > 3 unsupported");
}

inline void push_unique_direction(std::vector<RatVector>& out, const RatVector& d) {
    const RatVector p = primitive_direction(d);
    for (const auto& q : out)
        if (q == p) return;
    out.push_back(p);
}

} // namespace detail

/// Exact membership of p in the cone generated by gens (conic hull).
/// Caratheodory: p is in the hull iff it is a nonnegative combination of
/// some linearly independent subset of size <= rank.
inline bool in_generated_cone(const RatVector& p, const std::vector<RatVector>& gens) {
    if (p.is_zero()) return true;
    if (gens.empty()) return false;
    const std::size_t r = p.size();
    bool found = false;
    for (std::size_t k = 1; k <= r && !found; ++k) {
        detail::for_each_subset(gens.size(), k, [&](const std::vector<std::size_t>& idx) {
            if (found) return;
            // normal equations G^T G lambda = G^T p over the subset
            RatMatrix gram(k, k);
            RatVector rhs(k);
            for (std::size_t i = 0; i < k; ++i) {
                for (std::size_t j = 0; j < k; ++j)
                    gram(i, j) = dot(gens[idx[i]], gens[idx[j]]);
                rhs[i] = dot(gens[idx[i]], p);
            }
            auto lambda = rat_try_solve(gram, rhs);
            if (!lambda) return; // dependent subset
            RatVector combo(r);
            for (std::size_t i = 0; i < k; ++i) {
                if ((*lambda)[i] < 0) return;
                combo = combo + (*lambda)[i] * gens[idx[i]];
            }
            if (combo == p) found = true;
        });
    }
    return found;
}

/// Feasible ray directions of {y : <n, y> >= 0 for all n}: kernel lines of
/// (r-1)-subsets of normals, filtered by feasibility. For a pointed cone
/// this is exactly the extreme-ray set.
inline std::vector<RatVector> rays_from_normals(const std::vector<RatVector>& normals,
                                                std::size_t r) {
    std::vector<RatVector> rays;
    auto feasible = [&](const RatVector& d) {
        for (const auto& n : normals)
            if (dot(n, d) < 0) return false;
        return true;
    };
    if (r == 1) {
        const RatVector dirs[] = {RatVector{Rational(1)}, RatVector{Rational(-1)}};
        for (const RatVector& d : dirs)
            if (feasible(d)) detail::push_unique_direction(rays, d);
        return rays;
    }
    detail::for_each_subset(normals.size(), r - 1, [&](const std::vector<std::size_t>& idx) {
        std::vector<RatVector> rows;
        rows.reserve(r - 1);
        for (std::size_t i : idx) rows.push_back(normals[i]);
        RatVector d = detail::kernel_direction(rows, r);
        if (d.size() == 0) return;
        if (feasible(d)) detail::push_unique_direction(rays, d);
        if (feasible(-d)) detail::push_unique_direction(rays, -d);
    });
    std::sort(rays.begin(), rays.end());
    return rays;
}

/// Facet normals of the full-dimensional cone generated by gens.
/// Throws std::domain_error when the cone is not salient (a facet
/// description with apex 0 would not cut it out).
inline std::vector<RatVector> facets_from_generators(const std::vector<RatVector>& gens,
                                                     std::size_t r) {
    std::vector<RatVector> facets;
    if (r == 1) {
        for (const auto& g : gens) detail::push_unique_direction(facets, g);
        if (facets.size() != 1)
            throw std::domain_error("cone: generators not salient in rank 1");
        return facets;
    }
    detail::for_each_subset(gens.size(), r - 1, [&](const std::vector<std::size_t>& idx) {
        std::vector<RatVector> rows;
        rows.reserve(r - 1);
        for (std::size_t i : idx) rows.push_back(gens[i]);
        RatVector n = detail::kernel_direction(rows, r);
        if (n.size() == 0) return;
        bool nonneg = true, nonpos = true, strict = false;
        for (const auto& g : gens) {
            const Rational s = dot(n, g);
            if (s > 0) { nonpos = false; strict = true; }
            if (s < 0) { nonneg = false; strict = true; }
        }
        if (!strict) return; // all generators inside the hyperplane
        if (nonneg) detail::push_unique_direction(facets, n);
        else if (nonpos) detail::push_unique_direction(facets, -n);
    });
    if (rat_rank(RatMatrix::from_rows(facets)) != r)
        throw std::domain_error("cone: generated cone is not salient");
    std::sort(facets.begin(), facets.end());
    return facets;
}

} // namespace kestab

#endif // KESTAB_CONE_HPP
