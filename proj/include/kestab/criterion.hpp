/**
 * The Kaehler-Einstein existence verdict for a group compactification given
 * by its moment polytope: the weighted barycenter of the doubled positive
 * part is tested against the cone 4*rho + Xi. Strictly inside means a KE
 * metric exists; strictly outside the closure means the manifold is
 * K-unstable; on the boundary nothing is claimed and the verdict is
 * reported as indeterminate.
 *
 * When K-instability is certified for the built-in semisimple systems, the
 * report also flags that no Kaehler-Ricci soliton exists: the automorphism
 * center is finite, the Futaki invariant vanishes, so a soliton would
 * already be KE.
 */
#ifndef KESTAB_CRITERION_HPP
#define KESTAB_CRITERION_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "kestab/cone.hpp"
#include "kestab/integrate.hpp"
#include "kestab/polytope.hpp"
#include "kestab/rootsystem.hpp"

namespace kestab {

enum class Verdict { KE_EXISTS, K_UNSTABLE, BOUNDARY_INDETERMINATE };

inline std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::KE_EXISTS: return "KE_EXISTS";
        case Verdict::K_UNSTABLE: return "K_UNSTABLE";
        case Verdict::BOUNDARY_INDETERMINATE: return "BOUNDARY_INDETERMINATE";
    }
    throw std::logic_error("unreachable");
}

enum class ConeRegion { Interior, Boundary, Exterior };

struct FacetSlack {
    RatVector normal;
    Rational slack;
};

struct Membership {
    ConeRegion region;
    std::vector<FacetSlack> slacks;
};

/// Exact trichotomy of `point` against the translated cone apex + cone:
/// slack_i = <n_i, point - apex> per facet normal. Interior iff all > 0,
/// exterior iff any < 0, boundary otherwise.
inline Membership cone_membership(const RatVector& point, const RatVector& apex,
                                  const Cone& cone) {
    if (cone.facet_normals.empty())
        throw std::invalid_argument("cone_membership: cone has no facet description");
    Membership m;
    const RatVector d = point - apex;
    bool any_zero = false, any_neg = false;
    for (const auto& n : cone.facet_normals) {
        const Rational s = dot(n, d);
        any_zero = any_zero || s == 0;
        any_neg = any_neg || s < 0;
        m.slacks.push_back({n, s});
    }
    m.region = any_neg ? ConeRegion::Exterior
                       : (any_zero ? ConeRegion::Boundary : ConeRegion::Interior);
    return m;
}

struct Report {
    std::string system_label;
    RatVector barycenter_p_plus;
    RatVector barycenter_2p_plus;      ///< always exactly 2x the line above
    RatVector apex;                    ///< 4 rho
    std::vector<FacetSlack> facet_slacks; ///< of bar(2P+) against 4 rho + Xi
    Verdict verdict = Verdict::BOUNDARY_INDETERMINATE;
    bool no_soliton_flag = false;
    std::vector<std::string> notes;
};

/// The positive part cut out by the given half-spaces together with the
/// chamber walls. Accepts the half-spaces of the full W-invariant polytope,
/// of its positive part, or just the cuts beyond the walls — the chamber
/// intersection is idempotent.
inline Polytope positive_part(const RootSystem& rs, std::vector<HalfSpace> halfspaces) {
    for (const auto& n : weyl_chamber(rs).facet_normals)
        halfspaces.push_back(half_space(-n, 0));
    return enumerate_vertices(std::move(halfspaces));
}

/// Runs the whole pipeline on the polytope cut out by `halfspaces` plus the
/// chamber walls.
inline Report ke_verdict(const RootSystem& rs, const std::vector<HalfSpace>& halfspaces) {
    const Cone xi = xi_cone(rs);
    const WeightPolynomial weight = weight_polynomial(rs);

    const Polytope p_plus = positive_part(rs, halfspaces);
    const Polytope p_plus_2 = dilate(p_plus, 2);

    Report rep;
    rep.system_label = rs.label;
    rep.barycenter_p_plus = barycenter(p_plus, weight);
    rep.barycenter_2p_plus = barycenter(p_plus_2, weight);
    if (rep.barycenter_2p_plus != Rational(2) * rep.barycenter_p_plus)
        throw std::logic_error("ke_verdict: dilation homogeneity violated");

    const RatVector rho2 = two_rho(rs);
    rep.apex = Rational(2) * rho2;
    const Membership at4 = cone_membership(rep.barycenter_2p_plus, rep.apex, xi);
    const Membership at2 = cone_membership(rep.barycenter_p_plus, rho2, xi);
    if (at4.region != at2.region)
        throw std::logic_error("ke_verdict: scale cross-check failed");
    rep.facet_slacks = at4.slacks;

    switch (at4.region) {
        case ConeRegion::Interior: rep.verdict = Verdict::KE_EXISTS; break;
        case ConeRegion::Exterior: rep.verdict = Verdict::K_UNSTABLE; break;
        case ConeRegion::Boundary: rep.verdict = Verdict::BOUNDARY_INDETERMINATE; break;
    }

    if (rs.label == "Sp4")
        rep.notes.push_back(
            "Sp4 root convention: the published root list's (4,2) equals 2*rho and is "
            "not a C2 root; the long root (0,2) is used, matching the published weight "
            "and rho=(2,1).");
    if (rep.verdict == Verdict::K_UNSTABLE) {
        if (rs.is_builtin()) {
            rep.no_soliton_flag = true;
            rep.notes.push_back(
                "no-soliton: the automorphism center is finite for this semisimple "
                "system, the Futaki invariant vanishes, so K-instability also rules "
                "out Kaehler-Ricci solitons.");
        } else {
            rep.notes.push_back(
                "no-soliton flag not set: custom root systems are not checked for a "
                "finite automorphism center.");
        }
    }
    return rep;
}

/// Deterministic plain-text block; ends with the verdict line. With
/// `decimal` the rationals are rendered to 12 significant digits and the
/// block is marked approximate.
inline std::string render_report(const Report& rep, bool decimal = false) {
    auto fmt = [&](const Rational& q) {
        return decimal ? format_decimal(q) : format_rational(q);
    };
    auto fmt_vec = [&](const RatVector& v) {
        std::string s;
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) s += ' ';
            s += fmt(v[i]);
        }
        return s;
    };
    std::string out;
    out += "system " + rep.system_label + "\n";
    if (decimal) out += "format decimal (approximate)\n";
    for (const auto& n : rep.notes) out += "note " + n + "\n";
    out += "barycenter-P+ " + fmt_vec(rep.barycenter_p_plus) + "\n";
    out += "barycenter-2P+ " + fmt_vec(rep.barycenter_2p_plus) + "\n";
    out += "apex " + fmt_vec(rep.apex) + "\n";
    out += "no-soliton " + std::string(rep.no_soliton_flag ? "true" : "false") + "\n";
    for (const auto& fs : rep.facet_slacks)
        out += "slack " + format_vector(fs.normal) + " " + fmt(fs.slack) + "\n";
    out += "verdict " + to_string(rep.verdict) + "\n";
    return out;
}

} // namespace kestab

#endif // KESTAB_CRITERION_HPP
