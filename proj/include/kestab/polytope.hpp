/**
 * Exact convex polytopes in rank <= 3.
 *
 * Half-spaces are <normal, y> <= offset with the normal kept in primitive
 * integer form. Vertex enumeration is brute force over r-subsets of
 * half-spaces (every instance here has at most a dozen), feasible solutions
 * are deduplicated, and non-facet half-spaces are dropped, so a Polytope is
 * always in canonical irredundant form with lexicographically sorted
 * vertices.
 */
#ifndef KESTAB_POLYTOPE_HPP
#define KESTAB_POLYTOPE_HPP

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "kestab/cone.hpp"
#include "kestab/linalg.hpp"
#include "kestab/rootsystem.hpp"

namespace kestab {

struct HalfSpace {
    RatVector normal;
    Rational offset;

    friend bool operator==(const HalfSpace& a, const HalfSpace& b) {
        return a.normal == b.normal && a.offset == b.offset;
    }
    friend bool operator<(const HalfSpace& a, const HalfSpace& b) {
        if (a.normal == b.normal) return a.offset < b.offset;
        return a.normal < b.normal;
    }
};

inline HalfSpace half_space(RatVector normal, Rational offset) {
    return HalfSpace{std::move(normal), std::move(offset)};
}

/// Scales so the normal is a primitive integer vector.
inline HalfSpace canonical(const HalfSpace& h) {
    if (h.normal.is_zero()) throw std::invalid_argument("half-space: zero normal");
    const RatVector p = primitive_direction(h.normal);
    // p = normal / s with s > 0; find s from the first nonzero entry
    std::size_t i = 0;
    while (h.normal[i] == 0) ++i;
    const Rational scale = p[i] / h.normal[i];
    return HalfSpace{p, h.offset * scale};
}

struct UnboundedRegionError : std::domain_error {
    explicit UnboundedRegionError(const std::string& what) : std::domain_error(what) {}
};
struct EmptyRegionError : std::domain_error {
    EmptyRegionError() : std::domain_error("half-space system has empty solution set") {}
};

class Polytope {
public:
    const std::vector<HalfSpace>& halfspaces() const { return halfspaces_; }
    const std::vector<RatVector>& vertices() const { return vertices_; }
    /// Ambient coordinate dimension r.
    std::size_t ambient_dim() const { return ambient_; }
    /// Affine dimension of the vertex set (== ambient for full-dimensional).
    std::size_t dim() const { return dim_; }
    bool full_dimensional() const { return dim_ == ambient_; }

    bool contains(const RatVector& y) const {
        for (const auto& h : halfspaces_)
            if (dot(h.normal, y) > h.offset) return false;
        return true;
    }

    /// Vertices where the half-space is tight.
    std::vector<RatVector> tight_vertices(const HalfSpace& h) const {
        std::vector<RatVector> out;
        for (const auto& v : vertices_)
            if (dot(h.normal, v) == h.offset) out.push_back(v);
        return out;
    }

    /// Half-spaces tight at a vertex.
    std::vector<HalfSpace> tight_halfspaces(const RatVector& v) const {
        std::vector<HalfSpace> out;
        for (const auto& h : halfspaces_)
            if (dot(h.normal, v) == h.offset) out.push_back(h);
        return out;
    }

    friend bool operator==(const Polytope& a, const Polytope& b) {
        return a.vertices_ == b.vertices_;
    }

    friend Polytope enumerate_vertices(std::vector<HalfSpace> halfspaces);
    friend Polytope dilate(const Polytope& p, const Rational& t);

private:
    Polytope() = default;

    std::vector<HalfSpace> halfspaces_;
    std::vector<RatVector> vertices_;
    std::size_t ambient_ = 0;
    std::size_t dim_ = 0;
};

inline std::size_t affine_dim(const std::vector<RatVector>& points) {
    if (points.empty()) return 0;
    std::vector<RatVector> diffs;
    for (std::size_t i = 1; i < points.size(); ++i)
        diffs.push_back(points[i] - points[0]);
    if (diffs.empty()) return 0;
    return rat_rank(RatMatrix::from_rows(diffs));
}

/// Exact V-representation of the bounded region cut out by the half-spaces.
/// Throws UnboundedRegionError / EmptyRegionError as appropriate; rank <= 3.
inline Polytope enumerate_vertices(std::vector<HalfSpace> halfspaces) {
    if (halfspaces.empty()) throw std::invalid_argument("enumerate_vertices: no half-spaces");
    const std::size_t r = halfspaces[0].normal.size();
    if (r < 1 || r > 3)
        throw std::invalid_argument("enumerate_vertices: rank must be 1..3");
    for (auto& h : halfspaces) {
        if (h.normal.size() != r)
            throw std::invalid_argument("enumerate_vertices: mixed dimensions");
        h = canonical(h);
    }
    std::sort(halfspaces.begin(), halfspaces.end());
    halfspaces.erase(std::unique(halfspaces.begin(), halfspaces.end()), halfspaces.end());

    std::vector<RatVector> normals;
    for (const auto& h : halfspaces) normals.push_back(h.normal);
    if (rat_rank(RatMatrix::from_rows(normals)) != r)
        throw UnboundedRegionError("region is unbounded: half-space normals do not span");
    // a nonzero recession direction d satisfies <n, d> <= 0 for every normal
    std::vector<RatVector> neg;
    for (const auto& n : normals) neg.push_back(-n);
    if (!rays_from_normals(neg, r).empty())
        throw UnboundedRegionError("region is unbounded: recession direction exists");

    std::vector<RatVector> verts;
    detail::for_each_subset(halfspaces.size(), r, [&](const std::vector<std::size_t>& idx) {
        RatMatrix m(r, r);
        RatVector rhs(r);
        for (std::size_t i = 0; i < r; ++i) {
            for (std::size_t j = 0; j < r; ++j) m(i, j) = halfspaces[idx[i]].normal[j];
            rhs[i] = halfspaces[idx[i]].offset;
        }
        auto y = rat_try_solve(m, rhs);
        if (!y) return; // dependent normals, no isolated intersection point
        for (const auto& h : halfspaces)
            if (dot(h.normal, *y) > h.offset) return;
        verts.push_back(std::move(*y));
    });
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    if (verts.empty()) throw EmptyRegionError();

    Polytope p;
    p.ambient_ = r;
    p.dim_ = affine_dim(verts);
    p.vertices_ = std::move(verts);
    if (p.dim_ == r) {
        // keep exactly the facets: tight vertex sets of affine dimension r-1
        for (const auto& h : halfspaces) {
            std::vector<RatVector> tight;
            for (const auto& v : p.vertices_)
                if (dot(h.normal, v) == h.offset) tight.push_back(v);
            if (!tight.empty() && affine_dim(tight) == r - 1)
                p.halfspaces_.push_back(h);
        }
    } else {
        p.halfspaces_ = std::move(halfspaces);
    }
    return p;
}

/// Intersection with the closed chamber cone (inequalities <n, y> >= 0).
/// Throws EmptyRegionError when the intersection is empty.
inline Polytope positive_part(const Polytope& p, const Cone& chamber) {
    std::vector<HalfSpace> hs = p.halfspaces();
    for (const auto& n : chamber.facet_normals) {
        if (n.size() != p.ambient_dim())
            throw std::invalid_argument("positive_part: dimension mismatch");
        hs.push_back(half_space(-n, 0));
    }
    return enumerate_vertices(std::move(hs));
}

/// Convex hull of a 2D point set, as canonical half-spaces. Points must not
/// be all collinear.
inline std::vector<HalfSpace> hull_halfspaces_2d(std::vector<RatVector> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    auto cross = [](const RatVector& o, const RatVector& a, const RatVector& b) {
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
    };
    const std::size_t n = pts.size();
    if (n < 3 || affine_dim(pts) < 2)
        throw std::domain_error("hull: points are collinear");
    // monotone chain, counterclockwise
    std::vector<RatVector> hull(2 * n);
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) {
        while (k >= 2 && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
        hull[k++] = pts[i];
    }
    const std::size_t lower = k + 1;
    for (std::size_t i = n - 1; i-- > 0;) {
        while (k >= lower && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
        hull[k++] = pts[i];
    }
    hull.resize(k - 1);
    std::vector<HalfSpace> hs;
    for (std::size_t i = 0; i < hull.size(); ++i) {
        const RatVector& a = hull[i];
        const RatVector& b = hull[(i + 1) % hull.size()];
        const RatVector d = b - a;
        const RatVector normal{d[1], -d[0]}; // outward for a CCW boundary
        hs.push_back(canonical(half_space(normal, dot(normal, a))));
    }
    return hs;
}

/// Convex hull of the Weyl orbit of the vertices of p_plus, i.e. the full
/// W-invariant polytope P recovered from its positive part. Rank <= 2.
inline Polytope weyl_orbit_polytope(const Polytope& p_plus, const WeylGroup& w) {
    const std::size_t r = p_plus.ambient_dim();
    std::vector<RatVector> orbit;
    for (const auto& m : w.elements)
        for (const auto& v : p_plus.vertices())
            orbit.push_back(m * v);
    std::sort(orbit.begin(), orbit.end());
    orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
    if (r == 1) {
        const RatVector lo = orbit.front(), hi = orbit.back();
        return enumerate_vertices({half_space(RatVector{Rational(1)}, hi[0]),
                                   half_space(RatVector{Rational(-1)}, -lo[0])});
    }
    if (r == 2) return enumerate_vertices(hull_halfspaces_2d(std::move(orbit)));
    throw std::invalid_argument("weyl_orbit_polytope: rank > 2 hulls unsupported");
}

/// Scales the polytope by t > 0 about the origin.
inline Polytope dilate(const Polytope& p, const Rational& t) {
    if (t <= 0) throw std::invalid_argument("dilate: rate must be positive");
    Polytope q;
    q.ambient_ = p.ambient_;
    q.dim_ = p.dim_;
    for (const auto& h : p.halfspaces_)
        q.halfspaces_.push_back(half_space(h.normal, t * h.offset));
    for (const auto& v : p.vertices_) q.vertices_.push_back(t * v);
    return q;
}

/// Image of the polytope under an invertible linear map.
inline Polytope transform(const Polytope& p, const RatMatrix& m) {
    const std::size_t r = p.ambient_dim();
    if (!m.is_square() || m.rows() != r)
        throw std::invalid_argument("transform: matrix shape mismatch");
    // half-space <n, y> <= c maps to <inv(m)^T n, y'> <= c
    RatMatrix inv(r, r);
    for (std::size_t j = 0; j < r; ++j) {
        RatVector e(r);
        e[j] = 1;
        const RatVector col = rat_solve(m, e);
        for (std::size_t i = 0; i < r; ++i) inv(i, j) = col[i];
    }
    std::vector<HalfSpace> hs;
    for (const auto& h : p.halfspaces()) {
        RatVector n(r);
        for (std::size_t j = 0; j < r; ++j) {
            Rational s = 0;
            for (std::size_t i = 0; i < r; ++i) s += inv(i, j) * h.normal[i];
            n[j] = s;
        }
        hs.push_back(half_space(std::move(n), h.offset));
    }
    return enumerate_vertices(std::move(hs));
}

struct DelzantIssue {
    RatVector vertex;
    Rational det;     ///< determinant of the tight primitive normals (0 if non-simple)
    bool non_simple;  ///< vertex does not have exactly dim tight facets
};

struct DelzantResult {
    bool pass = true;
    std::vector<DelzantIssue> offenders;
};

/// Smoothness test for a full-dimensional 2D lattice-facet polytope: at
/// every vertex the two tight primitive facet normals must form a lattice
/// basis (determinant +-1).
inline DelzantResult delzant_check(const Polytope& p) {
    if (p.ambient_dim() != 2 || !p.full_dimensional())
        throw std::invalid_argument("delzant_check: requires a full-dimensional 2D polytope");
    DelzantResult res;
    for (const auto& v : p.vertices()) {
        const auto tight = p.tight_halfspaces(v);
        if (tight.size() != 2) {
            res.pass = false;
            res.offenders.push_back({v, 0, true});
            continue;
        }
        for (const auto& h : tight)
            if (!h.normal.is_integral())
                throw std::invalid_argument("delzant_check: non-rational facet data");
        RatMatrix m(2, 2);
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j) m(i, j) = tight[i].normal[j];
        const Rational d = rat_det(m);
        if (d != 1 && d != -1) {
            res.pass = false;
            res.offenders.push_back({v, d, false});
        }
    }
    return res;
}

} // namespace kestab

#endif // KESTAB_POLYTOPE_HPP
