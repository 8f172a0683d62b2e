#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "helpers.hpp"
#include "reeslift/binform.hpp"
#include "reeslift/poly.hpp"

using namespace reeslift;
using testutil::random_bihom;

TEST_CASE("binary form arithmetic and gcd") {
    auto fs = FieldSpec::rationals();
    std::mt19937_64 rng(11);

    SECTION("known gcd with monic normalization") {
        // (T0 - T1)(T0 + T1) and (T0 + T1)^2
        BinaryForm<Rational> a(std::vector<Rational>{1, 0, -1});
        BinaryForm<Rational> b(std::vector<Rational>{1, 2, 1});
        auto g = gcd_binary_forms(a, b);
        CHECK(g == BinaryForm<Rational>(std::vector<Rational>{1, 1}));
    }

    SECTION("gcd divides both and random coprimality") {
        for (int t = 0; t < 20; ++t) {
            auto a = random_form<Rational>(rng, fs, 4);
            auto b = random_form<Rational>(rng, fs, 3);
            auto c = random_form<Rational>(rng, fs, 2);
            if (a.zero() || b.zero() || c.zero()) continue;
            auto g = gcd_binary_forms(a * c, b * c);
            // c divides the gcd: gcd of (gcd, c) has the degree of the
            // smaller argument
            auto h = gcd_binary_forms(g, c);
            CHECK(h.degree() == std::min(g.degree(), c.degree()));
        }
    }

    SECTION("gcd of powers of T0 and T1 is constant") {
        auto g = gcd_binary_forms(BinaryForm<Rational>::monomial(5, 0),
                                  BinaryForm<Rational>::monomial(0, 3));
        CHECK(g.degree() == 0);
    }
}

TEST_CASE("grevlex order on the scroll ring") {
    auto sp = VarSpace::scroll(2, 3);
    auto fs = FieldSpec::rationals();
    // ties at equal total degree break at the least variable scanning up
    auto f = MultiPoly<Rational>::parse(sp, "T1*X + T0*X", fs);
    CHECK(f.str() == "T0*X + T1*X");
    auto g = MultiPoly<Rational>::parse(sp, "Y^2 + X*Y + X^2", fs);
    CHECK(g.str() == "X^2 + X*Y + Y^2");
}

TEMPLATE_TEST_CASE("print and parse round-trip", "", Rational, GFp) {
    using K = TestType;
    FieldSpec fs = std::is_same_v<K, Rational> ? FieldSpec::rationals() : FieldSpec::prime(32003);
    std::mt19937_64 rng(23);
    auto sp = VarSpace::tz();
    for (int t = 0; t < 30; ++t) {
        auto f = random_bihom<K>(rng, sp, 3 + static_cast<int>(rng() % 3), 2, fs);
        CHECK(MultiPoly<K>::parse(sp, f.str(), fs) == f);
    }
}

TEST_CASE("polynomial arithmetic identities") {
    auto fs = FieldSpec::prime(101);
    std::mt19937_64 rng(5);
    auto sp = VarSpace::tz();
    for (int t = 0; t < 20; ++t) {
        auto f = random_bihom<GFp>(rng, sp, 2, 1, fs);
        auto g = random_bihom<GFp>(rng, sp, 3, 1, fs);
        auto h = random_bihom<GFp>(rng, sp, 1, 2, fs);
        CHECK(f * (g + h * MultiPoly<GFp>::variable(sp, 0)) ==
              f * g + f * h * MultiPoly<GFp>::variable(sp, 0));
        CHECK((f - f).zero());
    }
}

TEST_CASE("bidegree and homogeneity checks") {
    auto fs = FieldSpec::rationals();
    auto sp = VarSpace::blocks(1, 2);
    auto f = MultiPoly<Rational>::parse(sp, "T1*X0 - T0*X1", fs);
    CHECK(f.bidegree() == std::pair{1, 1});
    CHECK(f.bihomogeneous());
    auto g = MultiPoly<Rational>::parse(sp, "T0 + X0", fs);
    CHECK_FALSE(g.bihomogeneous());
    CHECK_THROWS_AS(g.bidegree(), NotHomogeneous);
}

TEST_CASE("exact division") {
    auto fs = FieldSpec::prime(32003);
    std::mt19937_64 rng(17);
    auto sp = VarSpace::tz();
    for (int t = 0; t < 20; ++t) {
        auto f = random_bihom<GFp>(rng, sp, 2, 1, fs);
        auto g = random_bihom<GFp>(rng, sp, 3, 1, fs);
        if (f.zero() || g.zero()) continue;
        auto quo = try_divide(f * g, g);
        REQUIRE(quo.has_value());
        CHECK(*quo == f);
        // adding a non-multiple breaks exactness
        auto bad = f * g + MultiPoly<GFp>::variable(sp, 0);
        CHECK_FALSE(try_divide(bad, g).has_value());
    }
}

TEST_CASE("binary forms embed as T-polynomials") {
    BinaryForm<Rational> a(std::vector<Rational>{2, 0, -3});
    auto f = form_to_poly(a, VarSpace::t_only());
    CHECK(f.str() == "2*T0^2 - 3*T1^2");
}
