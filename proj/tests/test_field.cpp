#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "reeslift/field.hpp"
#include "reeslift/linalg.hpp"

using namespace reeslift;

TEST_CASE("rational coefficients parse and print exactly") {
    auto fs = FieldSpec::rationals();
    CHECK(parse_coeff<Rational>("-3/7", fs) == Rational(-3) / 7);
    CHECK(parse_coeff<Rational>("42", fs) == Rational(42));
    CHECK(coeff_str(Rational(-3) / 7) == "-3/7");
    CHECK(coeff_str(Rational(5)) == "5");
}

TEST_CASE("prime field arithmetic") {
    auto fs = FieldSpec::prime(32003);
    auto a = GFp::make(32003, 12345);
    auto b = GFp::make(32003, -1);
    CHECK(b.value() == 32002);
    CHECK((a * inv(a)).value() == 1);
    CHECK(is_zero(a - a));
    CHECK((a + b + GFp::make(32003, 1)) == a);
    CHECK(parse_coeff<GFp>("-3", fs) == GFp::make(32003, 32000));
}

TEST_CASE("lazy integer constants merge into any modulus") {
    GFp lazy(7);
    auto a = GFp::make(11, 3);
    CHECK((lazy + a).value() == 10);
    CHECK((lazy * a).value() == 10);
    CHECK(GFp(0) + a == a);
}

TEST_CASE("random elements are seed-deterministic") {
    auto fs = FieldSpec::prime(32003);
    std::mt19937_64 r1(99), r2(99);
    for (int k = 0; k < 20; ++k) CHECK(random_elem<GFp>(r1, fs) == random_elem<GFp>(r2, fs));
}

TEMPLATE_TEST_CASE("rref, rank and solve agree", "", Rational, GFp) {
    using K = TestType;
    FieldSpec fs = std::is_same_v<K, Rational> ? FieldSpec::rationals() : FieldSpec::prime(101);
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 25; ++trial) {
        std::size_t n = 2 + rng() % 4, m = 2 + rng() % 4;
        Matrix<K> M(n, m);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < m; ++c) M.at(r, c) = random_elem<K>(rng, fs);

        // rank-nullity
        CHECK(M.rank() + M.nullspace().size() == m);

        // every nullspace vector really is in the kernel
        for (const auto& v : M.nullspace())
            for (const auto& y : M.mul(v)) CHECK(is_zero(y));

        // solve returns an actual solution for a consistent system
        std::vector<K> x(m);
        for (auto& e : x) e = random_elem<K>(rng, fs);
        auto b = M.mul(x);
        auto sol = M.solve(b);
        REQUIRE(sol.has_value());
        auto b2 = M.mul(*sol);
        for (std::size_t r = 0; r < n; ++r) CHECK(b[r] == b2[r]);
    }
}

TEST_CASE("solve reports inconsistent systems") {
    Matrix<Rational> M(2, 1);
    M.at(0, 0) = 1;
    M.at(1, 0) = 1;
    CHECK_FALSE(M.solve({Rational(1), Rational(2)}).has_value());
    CHECK(M.solve({Rational(3), Rational(3)}).has_value());
}
