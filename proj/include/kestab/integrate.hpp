/**
 * Exact polynomial integration over polytopes.
 *
 * A polytope is fan-triangulated from its lexicographically smallest
 * vertex; each monomial is integrated over a simplex by mapping the
 * standard simplex affinely onto it, expanding the substituted monomial,
 * and applying the Dirichlet integral
 *
 *     int_{u >= 0, sum u <= 1} prod u_i^{b_i} du = (prod b_i!) / (r + sum b_i)!
 *
 * term by term, with the |det| of the edge map as Jacobian. All arithmetic
 * is rational, so weighted volumes, moments and barycenters are exact.
 */
#ifndef KESTAB_INTEGRATE_HPP
#define KESTAB_INTEGRATE_HPP

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "kestab/linalg.hpp"
#include "kestab/polytope.hpp"
#include "kestab/weight_polynomial.hpp"

namespace kestab {

struct Simplex {
    std::vector<RatVector> vertices; ///< r+1 affinely independent points
};

struct DegenerateDomainError : std::domain_error {
    explicit DegenerateDomainError(const std::string& what) : std::domain_error(what) {}
};

namespace detail {

/// Angular order of coplanar 3D points around their centroid, for fanning a
/// facet polygon. Exact: quadrant split then cross-product comparisons in
/// an orthogonal in-plane frame.
inline std::vector<RatVector> order_facet_polygon(std::vector<RatVector> pts,
                                                  const RatVector& facet_normal) {
    RatVector c(3);
    for (const auto& p : pts) c = c + p;
    c = Rational(1, static_cast<long long>(pts.size())) * c;
    RatVector u;
    for (const auto& p : pts) {
        if (!(p - c).is_zero()) { u = p - c; break; }
    }
    const RatVector& w = facet_normal;
    const RatVector v{w[1] * u[2] - w[2] * u[1],
                      w[2] * u[0] - w[0] * u[2],
                      w[0] * u[1] - w[1] * u[0]}; // v = w x u, orthogonal to u
    auto coords = [&](const RatVector& p) {
        const RatVector d = p - c;
        return std::pair<Rational, Rational>(dot(u, d), dot(v, d));
    };
    auto half = [&](const std::pair<Rational, Rational>& st) {
        return (st.second > 0 || (st.second == 0 && st.first > 0)) ? 0 : 1;
    };
    std::sort(pts.begin(), pts.end(), [&](const RatVector& a, const RatVector& b) {
        const auto sa = coords(a), sb = coords(b);
        const int ha = half(sa), hb = half(sb);
        if (ha != hb) return ha < hb;
        return sa.first * sb.second - sa.second * sb.first > 0;
    });
    return pts;
}

} // namespace detail

/// Fan triangulation apexed at `base`, which must be a vertex of p.
/// One simplex per facet (sub-triangulated in rank 3) not containing base.
inline std::vector<Simplex> triangulate_from(const Polytope& p, const RatVector& base) {
    const std::size_t r = p.ambient_dim();
    if (!p.full_dimensional())
        throw DegenerateDomainError("triangulate: polytope is not full-dimensional");
    if (std::find(p.vertices().begin(), p.vertices().end(), base) == p.vertices().end())
        throw std::invalid_argument("triangulate: base is not a vertex");
    if (r == 1)
        return {Simplex{{p.vertices().front(), p.vertices().back()}}};

    std::vector<Simplex> out;
    for (const auto& h : p.halfspaces()) {
        if (dot(h.normal, base) == h.offset) continue;
        const auto tight = p.tight_vertices(h);
        if (r == 2) {
            // a 2D facet is an edge: exactly two extreme points
            out.push_back(Simplex{{base, tight[0], tight[1]}});
        } else {
            const auto ring = detail::order_facet_polygon(tight, h.normal);
            for (std::size_t i = 1; i + 1 < ring.size(); ++i)
                out.push_back(Simplex{{base, ring[0], ring[i], ring[i + 1]}});
        }
    }
    return out;
}

inline std::vector<Simplex> triangulate(const Polytope& p) {
    return triangulate_from(p, p.vertices().front());
}

namespace detail {

inline Int factorial(unsigned n) {
    Int f = 1;
    for (unsigned i = 2; i <= n; ++i) f *= i;
    return f;
}

/// The substituted polynomial q(u) = poly(v0 + E u) on the standard simplex.
inline WeightPolynomial substitute_affine(const Simplex& s, const WeightPolynomial& poly) {
    const std::size_t r = s.vertices.size() - 1;
    const RatVector& v0 = s.vertices[0];
    std::vector<WeightPolynomial> coord; // y_k as a polynomial in u
    coord.reserve(r);
    for (std::size_t k = 0; k < r; ++k) {
        RatVector row(r);
        for (std::size_t i = 0; i < r; ++i) row[i] = s.vertices[i + 1][k] - v0[k];
        coord.push_back(WeightPolynomial::constant(r, v0[k]) +
                        WeightPolynomial::linear_form(row));
    }
    WeightPolynomial q = WeightPolynomial::constant(r, 0);
    for (const auto& [e, c] : poly.terms()) {
        WeightPolynomial term = WeightPolynomial::constant(r, c);
        for (std::size_t k = 0; k < r; ++k)
            for (unsigned j = 0; j < e[k]; ++j) term = term * coord[k];
        q = q + term;
    }
    return q;
}

/// Dirichlet formula applied to an expanded u-polynomial; no Jacobian.
inline Rational dirichlet_integral(const WeightPolynomial& q, std::size_t r) {
    Rational total = 0;
    for (const auto& [e, c] : q.terms()) {
        unsigned s = 0;
        Int num = 1;
        for (unsigned b : e) {
            s += b;
            num *= factorial(b);
        }
        total += c * Rational(num, factorial(static_cast<unsigned>(r) + s));
    }
    return total;
}

inline Rational simplex_jacobian(const Simplex& s) {
    const std::size_t r = s.vertices.size() - 1;
    RatMatrix edges(r, r);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t k = 0; k < r; ++k)
            edges(i, k) = s.vertices[i + 1][k] - s.vertices[0][k];
    return abs(rat_det(edges));
}

} // namespace detail

/// Exact integral of prod y_k^{expo_k} over the simplex.
inline Rational integrate_monomial_over_simplex(const Simplex& s,
                                                const std::vector<unsigned>& expo) {
    const std::size_t r = s.vertices.size() - 1;
    if (expo.size() != r)
        throw std::invalid_argument("integrate_monomial_over_simplex: exponent arity");
    const Rational jac = detail::simplex_jacobian(s);
    if (jac == 0) return 0;
    WeightPolynomial mono(r);
    mono.add_term(expo, 1);
    return jac * detail::dirichlet_integral(detail::substitute_affine(s, mono), r);
}

inline Rational integrate_polynomial_over_simplex(const Simplex& s,
                                                  const WeightPolynomial& poly) {
    const std::size_t r = s.vertices.size() - 1;
    const Rational jac = detail::simplex_jacobian(s);
    if (jac == 0) return 0;
    return jac * detail::dirichlet_integral(detail::substitute_affine(s, poly), r);
}

/// Exact integral of the polynomial over the full-dimensional polytope.
inline Rational integrate_polynomial(const Polytope& p, const WeightPolynomial& poly) {
    Rational total = 0;
    for (const auto& s : triangulate(p)) total += integrate_polynomial_over_simplex(s, poly);
    return total;
}

struct Moments {
    Rational weighted_volume;  ///< int_P poly dy
    RatVector first_moments;   ///< int_P y_k poly dy, componentwise
};

/// Weighted volume and first moments in one triangulation pass. Throws
/// DegenerateDomainError when the weighted volume vanishes (e.g. the
/// polytope lies inside a Weyl wall or is lower-dimensional).
inline Moments weighted_moments(const Polytope& p, const WeightPolynomial& poly) {
    if (!p.full_dimensional())
        throw DegenerateDomainError(
            "weighted moments: polytope is lower-dimensional, weighted volume is zero");
    const std::size_t r = p.ambient_dim();
    Moments m{0, RatVector(r)};
    const auto fan = triangulate(p);
    for (const auto& s : fan) m.weighted_volume += integrate_polynomial_over_simplex(s, poly);
    if (m.weighted_volume == 0)
        throw DegenerateDomainError("weighted moments: weight integrates to zero");
    for (std::size_t k = 0; k < r; ++k) {
        const WeightPolynomial yk_poly = poly.times_coordinate(k);
        for (const auto& s : fan)
            m.first_moments[k] += integrate_polynomial_over_simplex(s, yk_poly);
    }
    return m;
}

inline RatVector barycenter(const Moments& m) {
    RatVector b(m.first_moments.size());
    for (std::size_t k = 0; k < b.size(); ++k)
        b[k] = m.first_moments[k] / m.weighted_volume;
    return b;
}

/// Weighted barycenter int y poly / int poly over the polytope, exact.
inline RatVector barycenter(const Polytope& p, const WeightPolynomial& poly) {
    return barycenter(weighted_moments(p, poly));
}

} // namespace kestab

#endif // KESTAB_INTEGRATE_HPP
