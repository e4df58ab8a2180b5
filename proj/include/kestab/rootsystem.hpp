/**
 * Root-system data for the compactified group: positive roots, 2*rho, the
 * Weyl chamber, the cone spanned by the positive roots, the finite Weyl
 * group as exact reflection matrices, and the weight polynomial
 * prod_alpha <alpha, y>^2 taken over primitive root directions.
 *
 * Built-ins: SO4 (A1 x A1, rank 2) and Sp4 (C2, rank 2), in the coordinates
 * where the published example data lives. Note on Sp4: the published root
 * list includes (4,2); that vector equals 2*rho and is not a C2 root, so
 * the long root (0,2) is used instead — the unique choice consistent with
 * the published weight x^2 y^2 (x-y)^2 (x+y)^2 and rho = (2,1). Reports
 * emitted by the CLI carry the same note.
 */
#ifndef KESTAB_ROOTSYSTEM_HPP
#define KESTAB_ROOTSYSTEM_HPP

#include <algorithm>
#include <cstddef>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "kestab/cone.hpp"
#include "kestab/linalg.hpp"
#include "kestab/weight_polynomial.hpp"

namespace kestab {

struct RootSystem {
    std::size_t rank = 0;
    std::vector<RatVector> positive_roots; ///< nonzero, integral, pairwise non-parallel
    std::string label;                     ///< "SO4", "Sp4" or "custom"

    bool is_builtin() const { return label == "SO4" || label == "Sp4"; }
};

struct WeylGroup {
    std::vector<RatMatrix> elements; ///< closed under multiplication, contains identity
    std::size_t order() const { return elements.size(); }
};

inline RootSystem make_so4() {
    return RootSystem{2,
                      {RatVector::of_ints({1, -1}), RatVector::of_ints({1, 1})},
                      "SO4"};
}

inline RootSystem make_sp4() {
    return RootSystem{2,
                      {RatVector::of_ints({1, -1}), RatVector::of_ints({1, 1}),
                       RatVector::of_ints({2, 0}), RatVector::of_ints({0, 2})},
                      "Sp4"};
}

/// Custom system from an explicit positive-root list. Roots must be nonzero
/// integral vectors of length `rank`, pairwise non-parallel.
inline RootSystem make_custom(std::size_t rank, std::vector<RatVector> roots) {
    for (std::size_t i = 0; i < roots.size(); ++i) {
        if (roots[i].size() != rank)
            throw std::invalid_argument("root system: root length does not match rank");
        if (roots[i].is_zero())
            throw std::invalid_argument("root system: zero root");
        if (!roots[i].is_integral())
            throw std::invalid_argument("root system: roots must have integer entries");
        for (std::size_t j = 0; j < i; ++j)
            if (parallel(roots[i], roots[j]))
                throw std::invalid_argument("root system: parallel roots");
    }
    return RootSystem{rank, std::move(roots), "custom"};
}

inline RootSystem make_root_system(const std::string& label) {
    if (label == "SO4") return make_so4();
    if (label == "Sp4") return make_sp4();
    throw std::invalid_argument("unknown root system label '" + label + "'");
}

/// Sum of the positive roots (= 2 rho), exact.
inline RatVector two_rho(const RootSystem& rs) {
    RatVector s(rs.rank);
    for (const auto& alpha : rs.positive_roots) s = s + alpha;
    return s;
}

/// prod_alpha <primitive(alpha), y>^2, fully expanded. Degree 2|Phi+|.
inline WeightPolynomial weight_polynomial(const RootSystem& rs) {
    WeightPolynomial p = WeightPolynomial::constant(rs.rank, 1);
    for (const auto& alpha : rs.positive_roots) {
        const WeightPolynomial lin = WeightPolynomial::linear_form(primitive(alpha));
        p = p * lin * lin;
    }
    return p;
}

/// Closed Weyl chamber {y : <alpha, y> >= 0 for all alpha}, redundant
/// normals removed. Generators are populated when the chamber is pointed
/// (i.e. the roots span), otherwise left empty.
inline Cone weyl_chamber(const RootSystem& rs) {
    Cone c;
    for (const auto& alpha : rs.positive_roots) {
        const RatVector n = primitive(alpha);
        bool dup = false;
        for (const auto& m : c.facet_normals) dup = dup || m == n;
        if (!dup) c.facet_normals.push_back(n);
    }
    // Farkas: a normal is redundant iff it lies in the cone of the others.
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t i = 0; i < c.facet_normals.size(); ++i) {
            std::vector<RatVector> others;
            for (std::size_t j = 0; j < c.facet_normals.size(); ++j)
                if (j != i) others.push_back(c.facet_normals[j]);
            if (in_generated_cone(c.facet_normals[i], others)) {
                c.facet_normals.erase(c.facet_normals.begin() + i);
                changed = true;
                break;
            }
        }
    }
    std::sort(c.facet_normals.begin(), c.facet_normals.end());
    if (!rs.positive_roots.empty() &&
        rat_rank(RatMatrix::from_rows(rs.positive_roots)) == rs.rank)
        c.generators = rays_from_normals(c.facet_normals, rs.rank);
    return c;
}

/// The closed cone generated by the positive roots (the closure of Xi).
/// Generators are the extreme rays among the roots; facet normals cut the
/// same cone. Throws std::domain_error when the roots do not span or the
/// cone is not salient.
inline Cone xi_cone(const RootSystem& rs) {
    if (rs.positive_roots.empty() ||
        rat_rank(RatMatrix::from_rows(rs.positive_roots)) != rs.rank)
        throw std::domain_error(
            "xi cone: positive roots do not span, cone is not full-dimensional");
    Cone c;
    for (std::size_t i = 0; i < rs.positive_roots.size(); ++i) {
        std::vector<RatVector> others;
        for (std::size_t j = 0; j < rs.positive_roots.size(); ++j)
            if (j != i) others.push_back(rs.positive_roots[j]);
        if (!in_generated_cone(rs.positive_roots[i], others))
            c.generators.push_back(primitive(rs.positive_roots[i]));
    }
    std::sort(c.generators.begin(), c.generators.end());
    c.facet_normals = facets_from_generators(c.generators, rs.rank);
    // cross-check: the facet description cuts out no more than the hull
    for (const auto& ray : rays_from_normals(c.facet_normals, rs.rank))
        if (!in_generated_cone(ray, c.generators))
            throw std::domain_error("xi cone: facet/generator descriptions disagree");
    return c;
}

/// Reflection in the wall of alpha: y -> y - 2 (<alpha,y>/<alpha,alpha>) alpha.
inline RatMatrix reflection_matrix(const RatVector& alpha) {
    const std::size_t r = alpha.size();
    const Rational nn = dot(alpha, alpha);
    RatMatrix m = RatMatrix::identity(r);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
            m(i, j) -= 2 * alpha[i] * alpha[j] / nn;
    return m;
}

/// The finite group generated by all root reflections, as exact matrices.
/// Throws std::domain_error if closure exceeds `cap` elements.
inline WeylGroup weyl_group(const RootSystem& rs, std::size_t cap = 10000) {
    std::vector<RatMatrix> gens;
    gens.reserve(rs.positive_roots.size());
    for (const auto& alpha : rs.positive_roots)
        gens.push_back(reflection_matrix(alpha));

    auto key = [](const RatMatrix& m) {
        std::string k;
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) {
                k += format_rational(m(i, j));
                k += ',';
            }
        return k;
    };

    WeylGroup w;
    w.elements.push_back(RatMatrix::identity(rs.rank));
    std::set<std::string> seen{key(w.elements[0])};
    for (std::size_t head = 0; head < w.elements.size(); ++head) {
        for (const auto& g : gens) {
            RatMatrix next = g * w.elements[head];
            std::string k = key(next);
            if (!seen.insert(std::move(k)).second) continue;
            if (w.elements.size() >= cap)
                throw std::domain_error("weyl group: closure exceeds element cap");
            w.elements.push_back(std::move(next));
        }
    }
    return w;
}

} // namespace kestab

#endif // KESTAB_ROOTSYSTEM_HPP
