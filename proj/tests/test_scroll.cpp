#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "reeslift/scroll.hpp"

using namespace reeslift;

TEST_CASE("scroll generators for (1,2)") {
    auto b = scroll_generators<Rational>(1, 2);
    std::multiset<std::string> got;
    for (const auto& f : b.all()) got.insert(f.str());
    std::multiset<std::string> want = {
        "T1*X0 - T0*X1",  "T1*Y0 - T0*Y1",  "T1*Y1 - T0*Y2",
        "Y1^2 - Y0*Y2",   "X1*Y0 - X0*Y1",  "X1*Y1 - X0*Y2"};
    CHECK(got == want);
    CHECK(b.count() == 6);
}

TEST_CASE("generator count matches the closed formula") {
    for (int m1 = 0; m1 <= 6; ++m1)
        for (int m2 = m1; m2 <= 6; ++m2) {
            auto b = scroll_generators<Rational>(m1, m2);
            auto formula = static_cast<std::size_t>(m1 + m2 + m1 * (m1 - 1) / 2 +
                                                    m2 * (m2 - 1) / 2 + m1 * m2);
            INFO("(mu1,mu2)=(" << m1 << "," << m2 << ")");
            CHECK(b.count() == formula);
            CHECK(b.count() == scroll_generator_count(m1, m2));
        }
}

TEST_CASE("the listed generators form a Groebner basis") {
    for (int m1 = 0; m1 <= 3; ++m1)
        for (int m2 = std::max(m1, 1); m2 <= 3; ++m2) {
            auto b = scroll_generators<GFp>(m1, m2);
            INFO("(mu1,mu2)=(" << m1 << "," << m2 << ")");
            CHECK_NOTHROW(buchberger_check(b));
        }
}

TEST_CASE("normal form is zero exactly on ideal members") {
    auto b = scroll_generators<Rational>(2, 2);
    auto sp = b.space;
    auto fs = FieldSpec::rationals();
    auto member = MultiPoly<Rational>::parse(sp, "X0*Y1", fs) * b.all()[0] -
                  MultiPoly<Rational>::parse(sp, "T0*T1", fs) * b.all()[3];
    CHECK(normal_form(member, b).remainder.zero());
    auto outside = MultiPoly<Rational>::parse(sp, "X0*Y0", fs);
    CHECK(normal_form(outside, b).remainder == outside);
}

TEST_CASE("degenerate block sizes") {
    auto b = scroll_generators<Rational>(0, 0);
    CHECK(b.count() == 0);
    auto b1 = scroll_generators<Rational>(0, 1);
    CHECK(b1.count() == 1);
    CHECK(b1.all()[0].str() == "T1*Y0 - T0*Y1");
}
