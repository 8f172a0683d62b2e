#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "reeslift/oracle.hpp"
#include "reeslift/plane_rees.hpp"

using namespace reeslift;

TEST_CASE("bidegree slices have the right size") {
    auto tz = VarSpace::tz();
    // (i choose T0/T1) x (monomials of degree j in Z0,Z1,Z2)
    for (int i = 0; i <= 4; ++i)
        for (int j = 0; j <= 3; ++j) {
            auto s = slice_for(tz, i, j);
            CHECK(s.basis.size() ==
                  static_cast<std::size_t>((i + 1) * (j + 1) * (j + 2) / 2));
        }
    auto scroll = VarSpace::scroll(1, 2);
    // X carries grade (-1,1), Y (-2,1): fiber degree 1, T-degree 3 slice
    auto s = slice_for(scroll, 3, 1);
    CHECK(s.basis.size() == 11);  // X*T^4 (5 options) + Y*T^5 (6 options)
}

TEST_CASE("kernel of the curve substitution at the syzygy bidegree") {
    auto md = generate_instance<GFp>(8, 1, 2, FieldSpec::prime(32003), 3);
    auto psi = map_psi(md.curve);
    auto slice = slice_for(VarSpace::tz(), md.mu, 1);
    auto ker = kernel_at(psi, slice);
    REQUIRE(ker.size() == 1);
    auto p = p_form(md);
    CHECK(try_divide(ker[0], p).has_value());
}

TEST_CASE("low bidegree kernels are multiples of p") {
    auto md = generate_instance<GFp>(8, 1, 2, FieldSpec::prime(32003), 3);
    auto psi = map_psi(md.curve);
    auto p = p_form(md);
    for (int j = 1; j <= 3; ++j)
        for (int i = 0; i + md.mu2 * j < md.d() - md.mu1; ++i) {
            auto slice = slice_for(VarSpace::tz(), i, j);
            auto ker = kernel_at(psi, slice);
            std::size_t expect =
                i >= md.mu ? slice_for(VarSpace::tz(), i - md.mu, j - 1).basis.size() : 0;
            INFO("(i,j)=(" << i << "," << j << ")");
            CHECK(ker.size() == expect);
            for (const auto& f : ker) CHECK(try_divide(f, p).has_value());
        }
}

TEST_CASE("ideal dimension via multiples") {
    auto md = compute_mu_data(testutil::conic());
    auto p = p_form(md);
    auto slice = slice_for(VarSpace::tz(), 3, 2);
    // multiples of p at (3,2): p * slice(2,1)
    auto expect = slice_for(VarSpace::tz(), 2, 1).basis.size();
    CHECK(ideal_dim_at<Rational>({p}, slice) == expect);
}

TEST_CASE("minimality certificate flags redundancy") {
    auto md = compute_mu_data(testutil::conic());
    auto p = p_form(md);
    Monomial t0(p.space()->nvars(), 0);
    t0[0] = 1;
    auto t0p = p.times_monomial(t0);
    std::vector<LabelledGen<Rational>> gens = {{p, "p", "syzygy", p.bidegree()},
                                               {t0p, "T0*p", "syzygy", t0p.bidegree()}};
    auto cert = minimality_certificate(gens);
    REQUIRE(cert.size() == 2);
    CHECK(cert[0].minimal);
    CHECK_FALSE(cert[1].minimal);
}

TEST_CASE("budget guard trips on oversized problems") {
    auto sc = testutil::space17<Rational>(FieldSpec::rationals());
    auto gs = rees_space_generators(sc);
    CHECK_THROWS_AS(minimality_certificate(gs.gens, 10), BudgetExceeded);
}
