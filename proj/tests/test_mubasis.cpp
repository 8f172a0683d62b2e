#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "reeslift/mubasis.hpp"

using namespace reeslift;

namespace {

template <class K>
void check_invariants(const MuData<K>& md) {
    const auto& f = md.curve.f;
    INFO("d=" << md.curve.d << " mu1=" << md.mu1 << " mu2=" << md.mu2);
    CHECK(md.mu1 + md.mu2 == md.mu);
    CHECK(md.mu <= md.curve.d - md.mu);
    CHECK(dot3(md.p, f).zero());
    CHECK(dot3(md.q, f).zero());
    auto minors_pq = signed_minors(md.p, md.q);
    for (int l = 0; l < 3; ++l) CHECK(minors_pq[static_cast<std::size_t>(l)] == f[static_cast<std::size_t>(l)]);
    auto minors_ab = signed_minors(md.A, md.B);
    for (int l = 0; l < 3; ++l) CHECK(minors_ab[static_cast<std::size_t>(l)] == md.p[static_cast<std::size_t>(l)]);
    for (int l = 0; l < 3; ++l) {
        auto s = static_cast<std::size_t>(l);
        CHECK(md.alpha * md.A[s] + md.beta * md.B[s] == f[s]);
    }
    CHECK(md.alpha == dot3(md.q, md.B).scaled(K(-1)));
    CHECK(md.beta == dot3(md.q, md.A));
    CHECK(gcd_binary_forms(md.alpha, md.beta).degree() == 0);
}

}  // namespace

TEST_CASE("conic mu-basis and split") {
    auto md = compute_mu_data(testutil::conic());
    CHECK(md.mu == 1);
    CHECK(md.mu1 == 0);
    CHECK(md.mu2 == 1);
    auto t = VarSpace::t_only();
    CHECK(form_to_poly(md.p[0], t).str() == "T1");
    CHECK(form_to_poly(md.p[1], t).str() == "-T0");
    CHECK(md.p[2].zero());
    CHECK(form_to_poly(md.alpha, t).str() == "T1^2");
    CHECK(form_to_poly(md.beta, t).str() == "-T0");
    CHECK(md.A[0].zero());
    CHECK(md.A[1].zero());
    CHECK(form_to_poly(md.A[2], t).str() == "1");
    check_invariants(md);
}

TEST_CASE("quartic splits evenly") {
    auto md = compute_mu_data(testutil::quartic());
    CHECK(md.mu == 2);
    CHECK(md.mu1 == 1);
    CHECK(md.mu2 == 1);
    check_invariants(md);
}

TEST_CASE("validation rejects bad parametrizations") {
    using BF = BinaryForm<Rational>;
    ParamCurve<Rational> c;
    c.field = FieldSpec::rationals();

    SECTION("common factor") {
        c.d = 2;
        c.f = {BF::monomial(2, 0), BF::monomial(1, 1), BF::monomial(2, 0) + BF::monomial(1, 1)};
        CHECK_THROWS_AS(validate(c), CommonFactor);
    }
    SECTION("linear dependence") {
        c.d = 2;
        c.f = {BF::monomial(2, 0), BF::monomial(2, 0).scaled(Rational(3)), BF::monomial(0, 2)};
        CHECK_THROWS_AS(validate(c), LinearlyDependent);
    }
    SECTION("degree too small") {
        c.d = 1;
        c.f = {BF::monomial(1, 0), BF::monomial(0, 1), BF(1)};
        CHECK_THROWS_AS(validate(c), DegreeTooSmall);
    }
}

TEST_CASE("generated instances hit the requested stratum") {
    auto fs = FieldSpec::prime(32003);
    for (auto [d, m1, m2] : {std::tuple{6, 1, 2}, {8, 0, 3}, {10, 2, 3}, {12, 3, 3}}) {
        auto md = generate_instance<GFp>(d, m1, m2, fs, 2024);
        CHECK(md.curve.d == d);
        CHECK(md.mu1 == m1);
        CHECK(md.mu2 == m2);
        check_invariants(md);
    }
}

TEST_CASE("generation is seed-deterministic") {
    auto fs = FieldSpec::prime(32003);
    auto a = generate_instance<GFp>(8, 1, 2, fs, 31);
    auto b = generate_instance<GFp>(8, 1, 2, fs, 31);
    for (std::size_t l = 0; l < 3; ++l) CHECK(a.curve.f[l] == b.curve.f[l]);
}

TEST_CASE("rational instances work end to end") {
    auto md = generate_instance<Rational>(6, 1, 2, FieldSpec::rationals(), 5);
    check_invariants(md);
}
