#ifndef REESLIFT_TESTS_HELPERS_HPP
#define REESLIFT_TESTS_HELPERS_HPP

#include <random>

#include "reeslift/mubasis.hpp"
#include "reeslift/oracle.hpp"

namespace testutil {

using namespace reeslift;

/// The degree-2 parametrization (T0^2, T0*T1, T1^2).
inline ParamCurve<Rational> conic() {
    ParamCurve<Rational> c;
    c.field = FieldSpec::rationals();
    c.d = 2;
    c.f = {BinaryForm<Rational>::monomial(2, 0), BinaryForm<Rational>::monomial(1, 1),
           BinaryForm<Rational>::monomial(0, 2)};
    return c;
}

/// Degree-4 curve built from alpha = T0^3, beta = T1^3, A = (T0,T1,0),
/// B = (0,T0,T1); splits as mu1 = mu2 = 1.
inline ParamCurve<Rational> quartic() {
    auto alpha = BinaryForm<Rational>::monomial(3, 0);
    auto beta = BinaryForm<Rational>::monomial(0, 3);
    std::array<BinaryForm<Rational>, 3> A = {BinaryForm<Rational>::monomial(1, 0),
                                             BinaryForm<Rational>::monomial(0, 1),
                                             BinaryForm<Rational>(1)};
    std::array<BinaryForm<Rational>, 3> B = {BinaryForm<Rational>(1),
                                             BinaryForm<Rational>::monomial(1, 0),
                                             BinaryForm<Rational>::monomial(0, 1)};
    ParamCurve<Rational> c;
    c.field = FieldSpec::rationals();
    c.d = 4;
    for (std::size_t j = 0; j < 3; ++j) c.f[j] = alpha * A[j] + beta * B[j];
    return c;
}

/// The degree-17 space curve with alpha = T0^14, beta = T1^12.
template <class K>
ScrollCurve<K> space17(const FieldSpec& fs) {
    ScrollCurve<K> sc;
    sc.field = fs;
    sc.d = 17;
    sc.mu1 = 3;
    sc.mu2 = 5;
    sc.alpha = BinaryForm<K>::monomial(14, 0, make_elem<K>(fs, 1));
    sc.beta = BinaryForm<K>::monomial(0, 12, make_elem<K>(fs, 1));
    return sc;
}

/// Random bihomogeneous polynomial of bidegree (i,j), possibly zero.
template <class K>
MultiPoly<K> random_bihom(std::mt19937_64& rng, std::shared_ptr<const VarSpace> space, int i,
                          int j, const FieldSpec& spec) {
    auto slice = slice_for(space, i, j);
    MultiPoly<K> f(space);
    for (const auto& m : slice.basis)
        if (rng() % 2 == 0) f.add_term(m, random_elem<K>(rng, spec));
    return f;
}

}  // namespace testutil

#endif
