#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "helpers.hpp"
#include "reeslift/plane_rees.hpp"

using namespace reeslift;

TEST_CASE("p and q forms satisfy the determinant identity") {
    auto md = generate_instance<GFp>(9, 2, 2, FieldSpec::prime(32003), 21);
    auto [p, q] = pq_forms(md);
    CHECK(p == p_form(md));
    CHECK(q == q_form(md));
    CHECK(p.bidegree() == std::pair{md.mu, 1});
    CHECK(q.bidegree() == std::pair{md.d() - md.mu, 1});
}

TEST_CASE("expressing a multiple of p recovers exact cofactors") {
    auto md = generate_instance<GFp>(8, 1, 2, FieldSpec::prime(32003), 9);
    auto op = express_in_p(q_form(md), md);
    auto sp = VarSpace::tz();
    MultiPoly<GFp> acc(sp);
    for (std::size_t l = 0; l < 3; ++l)
        acc = acc + form_to_poly(md.p[l], sp) * op.comp[l];
    CHECK(acc == q_form(md));
    Monomial m(sp->nvars(), 0);
    m[0] = md.mu - 1;
    m[2] = 1;
    CHECK_THROWS_AS(express_in_p(MultiPoly<GFp>(sp, m, GFp::make(32003, 1)), md), NotInPIdeal);
}

TEST_CASE("determinantal operators shift bidegrees and intertwine with X and Y") {
    auto md = generate_instance<GFp>(10, 1, 3, FieldSpec::prime(32003), 33);
    auto q = q_form(md);
    auto om = map_Omega(md);
    auto X = MultiPoly<GFp>::variable(om.dst, om.dst->index_of("X"));
    auto Y = MultiPoly<GFp>::variable(om.dst, om.dst->index_of("Y"));

    auto da = D_A(q, md);
    CHECK(da.bidegree() == std::pair{md.d() - md.mu - md.mu1, 2});
    CHECK(om.apply(da) == X * om.apply(q));

    auto db = D_B(q, md);
    CHECK(db.bidegree() == std::pair{md.d() - md.mu - md.mu2, 2});
    CHECK(om.apply(db) == -(Y * om.apply(q)));
}

TEST_CASE("guaranteed region inequalities") {
    CHECK(dd_guaranteed(22, 1, 5, 0, 0));
    CHECK(dd_guaranteed(22, 1, 5, 7, 0));
    CHECK_FALSE(dd_guaranteed(22, 1, 5, 8, 0));
    CHECK(dd_guaranteed(22, 1, 5, 6, 1));
    CHECK_FALSE(dd_guaranteed(22, 1, 5, 7, 1));
    CHECK(dd_guaranteed(22, 1, 5, 1, 2));
}

TEST_CASE("region enumeration for the degree-22 example") {
    auto rd = dd_region(22, 1, 5);
    std::set<std::pair<int, int>> guaranteed, open_bidegs;
    for (const auto& e : rd.entries) {
        if (e.status == RegionStatus::Guaranteed)
            guaranteed.insert({e.a, e.b});
        else
            open_bidegs.insert({e.i, e.j});
    }
    std::set<std::pair<int, int>> want;
    for (int a = 0; a <= 7; ++a) want.insert({a, 0});
    for (int b = 1; b <= 2; ++b)
        for (int a = 0; a + 5 * b <= 11; ++a) want.insert({a, b});
    CHECK(guaranteed == want);
    CHECK(guaranteed.size() == 17);
    CHECK(open_bidegs == std::set<std::pair<int, int>>{{6, 11}, {7, 10}, {8, 9}});
    CHECK(rd.p_marker == std::pair{6, 1});
    CHECK(rd.q_marker == std::pair{16, 1});
}

TEST_CASE("quartic family contains q and its images") {
    auto md = compute_mu_data(testutil::quartic());
    auto fam = dd_family(md);
    std::set<std::pair<int, int>> computed;
    for (const auto& m : fam.members) {
        REQUIRE(m.status == RegionStatus::Guaranteed);
        REQUIRE(m.poly.has_value());
        computed.insert({m.a, m.b});
        CHECK(in_K(*m.poly, md));
    }
    CHECK(computed.count({0, 0}));
    CHECK(computed.count({0, 1}));
    auto rep = lift_and_check(md, fam);
    CHECK(rep.size() == fam.members.size());
    for (const auto& it : rep) CHECK(it.pass);
}

TEST_CASE("split-basis lift multiplies the scroll image by X") {
    auto md = compute_mu_data(testutil::quartic());
    auto q = q_form(md);
    auto om = map_Omega(md);
    auto X = MultiPoly<Rational>::variable(om.dst, om.dst->index_of("X"));
    auto lifted = split_basis_A_lift(q, md);
    CHECK(om.apply(lifted) == X * om.apply(q));
}

TEST_CASE("degenerate split disables the first operator") {
    auto md = generate_instance<GFp>(8, 0, 3, FieldSpec::prime(32003), 13);
    auto fam = dd_family(md);
    CHECK(fam.diagram.da_disabled);
    CHECK_FALSE(fam.diagram.warning.empty());
    for (const auto& m : fam.members) CHECK(m.a == 0);
}
