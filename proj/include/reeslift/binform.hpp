#ifndef REESLIFT_BINFORM_HPP
#define REESLIFT_BINFORM_HPP

#include <algorithm>
#include <array>
#include <random>
#include <vector>

#include "errors.hpp"
#include "field.hpp"

namespace reeslift {

/// Dense homogeneous binary form in T0,T1. Coefficients run from T0^deg
/// down to T1^deg: c[i] is the coefficient of T0^{deg-i} T1^i.
/// The degree is part of the value, so the zero form of degree n exists.
template <class K>
struct BinaryForm {
    std::vector<K> c;

    BinaryForm() : c(1) {}
    explicit BinaryForm(int deg) : c(static_cast<std::size_t>(deg) + 1) {
        if (deg < 0) throw InvalidParameters("negative form degree");
    }
    explicit BinaryForm(std::vector<K> coeffs) : c(std::move(coeffs)) {
        if (c.empty()) throw InvalidParameters("empty coefficient list");
    }

    int degree() const { return static_cast<int>(c.size()) - 1; }
    bool zero() const {
        return std::all_of(c.begin(), c.end(), [](const K& x) { return is_zero(x); });
    }

    /// Leading coefficient under T0 > T1 (first nonzero from the T0^deg end).
    K leading() const {
        for (const auto& x : c)
            if (!is_zero(x)) return x;
        throw ZeroPolynomial();
    }

    friend BinaryForm operator+(const BinaryForm& a, const BinaryForm& b) {
        if (a.degree() != b.degree()) throw DegreeMismatch("binary form addition");
        BinaryForm r(a.degree());
        for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] = a.c[i] + b.c[i];
        return r;
    }
    friend BinaryForm operator-(const BinaryForm& a, const BinaryForm& b) {
        if (a.degree() != b.degree()) throw DegreeMismatch("binary form subtraction");
        BinaryForm r(a.degree());
        for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] = a.c[i] - b.c[i];
        return r;
    }
    friend BinaryForm operator*(const BinaryForm& a, const BinaryForm& b) {
        BinaryForm r(a.degree() + b.degree());
        for (std::size_t i = 0; i < a.c.size(); ++i) {
            if (is_zero(a.c[i])) continue;
            for (std::size_t j = 0; j < b.c.size(); ++j) r.c[i + j] = r.c[i + j] + a.c[i] * b.c[j];
        }
        return r;
    }
    BinaryForm scaled(const K& s) const {
        BinaryForm r(degree());
        for (std::size_t i = 0; i < c.size(); ++i) r.c[i] = c[i] * s;
        return r;
    }
    friend bool operator==(const BinaryForm& a, const BinaryForm& b) {
        return a.degree() == b.degree() && a.c == b.c;
    }

    /// T0^a T1^b as a form of degree a+b.
    static BinaryForm monomial(int a, int b, const K& coeff = K(1)) {
        BinaryForm r(a + b);
        r.c[static_cast<std::size_t>(b)] = coeff;
        return r;
    }
};

namespace detail {

/// Univariate polynomial in t = T1/T0, dense, low degree first; trimmed.
template <class K>
std::vector<K> trim(std::vector<K> u) {
    while (u.size() > 1 && is_zero(u.back())) u.pop_back();
    return u;
}

template <class K>
std::vector<K> uni_rem(std::vector<K> a, const std::vector<K>& b) {
    K lead = b.back();
    while (a.size() >= b.size() && !(a.size() == 1 && is_zero(a[0]))) {
        K f = a.back() / lead;
        std::size_t off = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[off + i] = a[off + i] - f * b[i];
        a = trim(std::move(a));
        if (a.size() == 1 && is_zero(a[0])) break;
    }
    return a;
}

}  // namespace detail

/// Monic gcd of two binary forms: common T0/T1 powers are tracked, the rest
/// is a Euclidean gcd of the dehomogenizations at t = T1/T0.
template <class K>
BinaryForm<K> gcd_binary_forms(const BinaryForm<K>& f, const BinaryForm<K>& g) {
    if (f.zero() && g.zero()) throw BothZero();
    if (f.zero()) return gcd_binary_forms(g, g);
    if (g.zero()) {
        K lead = f.leading();
        return f.scaled(inv(lead));
    }
    // u(t) = sum c[i] t^i, so f = T0^{deg f} u(T1/T0); the T0-multiplicity of f
    // is deg f - deg u and the T1-multiplicity is the valuation of u.
    std::vector<K> uf = detail::trim(f.c), ug = detail::trim(g.c);
    int t0f = f.degree() - (static_cast<int>(uf.size()) - 1);
    int t0g = g.degree() - (static_cast<int>(ug.size()) - 1);
    int t0common = std::min(t0f, t0g);
    // Euclid (the common t-power, i.e. the T1 part, comes out of the gcd itself)
    while (!(ug.size() == 1 && is_zero(ug[0]))) {
        uf = detail::uni_rem(std::move(uf), ug);
        std::swap(uf, ug);
    }
    BinaryForm<K> w(t0common + static_cast<int>(uf.size()) - 1);
    for (std::size_t i = 0; i < uf.size(); ++i) w.c[i] = uf[i];
    return w.scaled(inv(w.leading()));
}

/// Dot product of two length-3 form triples; all entries must have matching degrees.
template <class K>
BinaryForm<K> dot3(const std::array<BinaryForm<K>, 3>& a, const std::array<BinaryForm<K>, 3>& b) {
    BinaryForm<K> r = a[0] * b[0];
    r = r + a[1] * b[1];
    return r + a[2] * b[2];
}

template <class K>
BinaryForm<K> random_form(std::mt19937_64& rng, const FieldSpec& spec, int deg) {
    BinaryForm<K> r(deg);
    for (auto& x : r.c) x = random_elem<K>(rng, spec);
    return r;
}

}  // namespace reeslift

#endif
