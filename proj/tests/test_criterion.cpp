#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "kestab/criterion.hpp"

using namespace kestab;

TEST_CASE("cone membership trichotomy") {
    const Cone xi = xi_cone(make_so4());
    const RatVector apex = RatVector::of_ints({2, 0});

    // case (1) barycenter: interior with slacks (4/7, 4/7)
    const Membership in =
        cone_membership(RatVector{make_rational(18, 7), Rational(0)}, apex, xi);
    CHECK(in.region == ConeRegion::Interior);
    REQUIRE(in.slacks.size() == 2);
    CHECK(in.slacks[0].normal == RatVector::of_ints({1, -1}));
    CHECK(in.slacks[0].slack == make_rational(4, 7));
    CHECK(in.slacks[1].normal == RatVector::of_ints({1, 1}));
    CHECK(in.slacks[1].slack == make_rational(4, 7));

    // case (2) barycenter: slack -2/49 on the (1,-1) facet, exterior
    const Membership out = cone_membership(
        RatVector{make_rational(489, 196), make_rational(15, 28)}, apex, xi);
    CHECK(out.region == ConeRegion::Exterior);
    CHECK(out.slacks[0].slack == make_rational(-2, 49));
    CHECK(out.slacks[0].slack < 0);
    CHECK(out.slacks[1].slack > 0);

    // the apex itself sits on the boundary with all slacks zero
    const Membership bd = cone_membership(apex, apex, xi);
    CHECK(bd.region == ConeRegion::Boundary);
    for (const auto& s : bd.slacks) CHECK(s.slack == 0);
}

TEST_CASE("ke_verdict on the catalog") {
    const Report r1 = ke_verdict(make_so4(), get_entry("so4-1").extra_halfspaces);
    CHECK(r1.verdict == Verdict::KE_EXISTS);
    CHECK_FALSE(r1.no_soliton_flag);
    CHECK(r1.barycenter_p_plus == RatVector{make_rational(18, 7), Rational(0)});
    CHECK(r1.barycenter_2p_plus == RatVector{make_rational(36, 7), Rational(0)});

    const Report r3 = ke_verdict(make_so4(), get_entry("so4-3").extra_halfspaces);
    CHECK(r3.verdict == Verdict::K_UNSTABLE);
    CHECK(r3.no_soliton_flag);

    const Report s3 = ke_verdict(make_sp4(), get_entry("sp4-3").extra_halfspaces);
    CHECK(s3.verdict == Verdict::K_UNSTABLE);
    CHECK(s3.no_soliton_flag);
    // the violated facet is x + y (bar(2P+) coordinate sum below 12)
    REQUIRE(s3.facet_slacks.size() == 2);
    CHECK(s3.facet_slacks[0].normal == RatVector::of_ints({1, 0}));
    CHECK(s3.facet_slacks[0].slack > 0);
    CHECK(s3.facet_slacks[1].normal == RatVector::of_ints({1, 1}));
    CHECK(s3.facet_slacks[1].slack < 0);
}

TEST_CASE("verdicts agree at both scales") {
    for (const auto& e : catalog()) {
        const RootSystem rs = make_root_system(e.system_label);
        const Cone xi = xi_cone(rs);
        const WeightPolynomial w = weight_polynomial(rs);
        const Polytope p_plus = positive_part(rs, e.extra_halfspaces);
        const RatVector bar1 = barycenter(p_plus, w);
        const RatVector bar2 = barycenter(dilate(p_plus, 2), w);
        const RatVector rho2 = two_rho(rs);
        const Membership m2 = cone_membership(bar1, rho2, xi);
        const Membership m4 = cone_membership(bar2, Rational(2) * rho2, xi);
        CHECK(m2.region == m4.region);
        for (std::size_t i = 0; i < m2.slacks.size(); ++i)
            CHECK(m4.slacks[i].slack == Rational(2) * m2.slacks[i].slack);
    }
}

TEST_CASE("verdict invariant under weight rescaling") {
    testing::Rng rng(13);
    for (const auto& e : catalog()) {
        const RootSystem rs = make_root_system(e.system_label);
        const Cone xi = xi_cone(rs);
        const Polytope p_plus = positive_part(rs, e.extra_halfspaces);
        const WeightPolynomial w = weight_polynomial(rs);
        const Membership base = cone_membership(barycenter(p_plus, w), two_rho(rs), xi);
        const WeightPolynomial scaled = rng.positive_rational() * w;
        const Membership again =
            cone_membership(barycenter(p_plus, scaled), two_rho(rs), xi);
        CHECK(base.region == again.region);
        for (std::size_t i = 0; i < base.slacks.size(); ++i)
            CHECK(base.slacks[i].slack == again.slacks[i].slack);
    }
}

TEST_CASE("each catalog cut strictly lowers the cut functional of the barycenter") {
    // cutting P+ with <h, y> <= c removes exactly the mass on the high-h
    // side, so <h, bar(P+)> must strictly decrease
    auto bar = [](const char* id) {
        const auto& e = get_entry(id);
        const RootSystem rs = make_root_system(e.system_label);
        return barycenter(positive_part(rs, e.extra_halfspaces), weight_polynomial(rs));
    };
    const RatVector h12 = RatVector::of_ints({1, -1}); // so4-1 -> so4-2 cut
    CHECK(dot(h12, bar("so4-2")) < dot(h12, bar("so4-1")));
    const RatVector h23 = RatVector::of_ints({2, -1}); // so4-2 -> so4-3 cut
    CHECK(dot(h23, bar("so4-3")) < dot(h23, bar("so4-2")));
    const RatVector g21 = RatVector::of_ints({1, 1}); // sp4-2 -> sp4-1 cut
    CHECK(dot(g21, bar("sp4-1")) < dot(g21, bar("sp4-2")));
    const RatVector g13 = RatVector::of_ints({2, 1}); // sp4-1 -> sp4-3 cut
    CHECK(dot(g13, bar("sp4-3")) < dot(g13, bar("sp4-1")));
}

TEST_CASE("report rendering is deterministic and ends with the verdict") {
    const Report rep = ke_verdict(make_so4(), get_entry("so4-1").extra_halfspaces);
    CHECK(render_report(rep) ==
          "system SO4\n"
          "barycenter-P+ 18/7 0\n"
          "barycenter-2P+ 36/7 0\n"
          "apex 4 0\n"
          "no-soliton false\n"
          "slack 1 -1 8/7\n"
          "slack 1 1 8/7\n"
          "verdict KE_EXISTS\n");

    const Report unstable = ke_verdict(make_sp4(), get_entry("sp4-3").extra_halfspaces);
    const std::string text = render_report(unstable);
    CHECK(text.find("note Sp4 root convention") != std::string::npos);
    CHECK(text.find("note no-soliton:") != std::string::npos);
    const std::string tail = "verdict K_UNSTABLE\n";
    REQUIRE(text.size() >= tail.size());
    CHECK(text.substr(text.size() - tail.size()) == tail);
}
