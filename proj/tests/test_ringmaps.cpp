#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "helpers.hpp"
#include "reeslift/ringmaps.hpp"

using namespace reeslift;
using testutil::random_bihom;

TEST_CASE("substitution maps compose as the diagram says") {
    auto fs = FieldSpec::prime(32003);
    std::mt19937_64 rng(42);
    auto md = generate_instance<GFp>(8, 1, 2, fs, 12);
    auto sc = md.scroll_curve();

    auto phi_prime = map_phi_prime<GFp>(md.mu1, md.mu2);
    auto phi = map_phi(sc);
    auto Phi = map_Phi(sc);
    auto Gamma = map_Gamma(md);
    auto Omega = map_Omega(md);
    auto psi = map_psi(md.curve);

    for (int t = 0; t < 15; ++t) {
        auto F = random_bihom<GFp>(rng, VarSpace::blocks(md.mu1, md.mu2), 2, 2, fs);
        CHECK(Phi.apply(F) == phi.apply(phi_prime.apply(F)));
    }
    for (int t = 0; t < 15; ++t) {
        auto F = random_bihom<GFp>(rng, VarSpace::tz(), 3, 2, fs);
        CHECK(Omega.apply(F) == phi_prime.apply(Gamma.apply(F)));
        CHECK(psi.apply(F) == phi.apply(Omega.apply(F)));
    }
}

TEST_CASE("syzygies land in the expected kernels") {
    auto fs = FieldSpec::prime(32003);
    auto md = generate_instance<GFp>(9, 1, 3, fs, 4);
    auto sc = md.scroll_curve();
    auto p = p_form(md);
    auto q = q_form(md);

    CHECK(map_psi(md.curve).apply(p).zero());
    CHECK(map_psi(md.curve).apply(q).zero());
    CHECK(in_ker_omega(p, md));
    CHECK_FALSE(in_ker_omega(q, md));
    CHECK(in_K(p, md));
    CHECK(in_K(q, md));

    // Omega sends q to -(alpha*Y - beta*X)
    auto g = g_form(sc);
    CHECK(map_Omega(md).apply(q) == -g);
}

TEST_CASE("membership in the space-curve ideal via the g-divisibility test") {
    auto sc = testutil::space17<Rational>(FieldSpec::rationals());
    auto fs = FieldSpec::rationals();
    auto sp = VarSpace::blocks(sc.mu1, sc.mu2);
    auto F1 = MultiPoly<Rational>::parse(sp, "Y0^2*Y1 - X3*Y5^2", fs);
    auto F2 = MultiPoly<Rational>::parse(sp, "T1^9*X3 - T0^9*Y0", fs);
    auto G = MultiPoly<Rational>::parse(sp, "T1*X0 - T0*X1", fs);
    CHECK(in_I(F1, sc));
    CHECK(in_I(F2, sc));
    CHECK(in_I(G, sc));
    CHECK_FALSE(in_I(MultiPoly<Rational>::parse(sp, "T1*X0 + T0*X1", fs), sc));
}

TEST_CASE("maps reject polynomials from the wrong space") {
    auto md = generate_instance<GFp>(6, 1, 2, FieldSpec::prime(101), 1);
    auto F = MultiPoly<GFp>::parse(VarSpace::t_only(), "T0", FieldSpec::prime(101));
    CHECK_THROWS_AS(map_Omega(md).apply(F), SpaceMismatch);
}
