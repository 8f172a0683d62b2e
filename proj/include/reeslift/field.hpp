#ifndef REESLIFT_FIELD_HPP
#define REESLIFT_FIELD_HPP

#include <cstdint>
#include <random>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "errors.hpp"

namespace reeslift {

/// Exact rationals: canonical (reduced, positive denominator) by construction.
using Rational = boost::multiprecision::cpp_rational;

/// Runtime description of the coefficient field, used by instance I/O and the CLI.
struct FieldSpec {
    bool rational = true;
    std::int64_t p = 0;  // modulus when !rational

    static FieldSpec rationals() { return {true, 0}; }
    static FieldSpec prime(std::int64_t p) {
        if (p < 3 || !is_prime(p)) throw InvalidParameters("field modulus must be a prime >= 3");
        return {false, p};
    }

    static bool is_prime(std::int64_t n) {
        if (n < 2) return false;
        for (std::int64_t d = 2; d * d <= n; ++d)
            if (n % d == 0) return false;
        return true;
    }
};

/// Prime-field element. The modulus travels with the value; a default-constructed
/// element (p == 0) is an integer constant that adopts the modulus of the first
/// moded operand it meets, so generic code can use literals like K(1) and K(-1).
class GFp {
  public:
    GFp() = default;
    GFp(std::int64_t c) : v_(c) {}  // NOLINT: implicit on purpose, mirrors Rational(int)
    static GFp make(std::int64_t p, std::int64_t v) {
        GFp r;
        r.p_ = p;
        r.v_ = mod(v, p);
        return r;
    }

    std::int64_t value() const { return v_; }
    std::int64_t modulus() const { return p_; }

    friend GFp operator+(const GFp& a, const GFp& b) {
        auto [x, y, p] = align(a, b);
        return p ? make(p, x + y) : GFp(x + y);
    }
    friend GFp operator-(const GFp& a, const GFp& b) {
        auto [x, y, p] = align(a, b);
        return p ? make(p, x - y) : GFp(x - y);
    }
    friend GFp operator*(const GFp& a, const GFp& b) {
        auto [x, y, p] = align(a, b);
        return p ? make(p, x * y) : GFp(x * y);
    }
    friend GFp operator/(const GFp& a, const GFp& b) { return a * b.inverse(); }
    GFp operator-() const { return p_ ? make(p_, -v_) : GFp(-v_); }
    GFp& operator+=(const GFp& o) { return *this = *this + o; }
    GFp& operator-=(const GFp& o) { return *this = *this - o; }
    GFp& operator*=(const GFp& o) { return *this = *this * o; }
    GFp& operator/=(const GFp& o) { return *this = *this / o; }

    friend bool operator==(const GFp& a, const GFp& b) {
        auto [x, y, p] = align(a, b);
        return x == y;
    }
    friend bool operator!=(const GFp& a, const GFp& b) { return !(a == b); }

    GFp inverse() const {
        if (p_ == 0) {
            if (v_ == 1) return GFp(1);
            if (v_ == -1) return GFp(-1);
            throw InternalInconsistency("inverse of an unreduced GF(p) constant");
        }
        if (v_ == 0) throw DivisionByZero();
        // extended Euclid
        std::int64_t a = v_, m = p_, x0 = 1, x1 = 0;
        while (m) {
            std::int64_t q = a / m;
            a -= q * m;
            std::swap(a, m);
            x0 -= q * x1;
            std::swap(x0, x1);
        }
        return make(p_, x0);
    }

  private:
    static std::int64_t mod(std::int64_t v, std::int64_t p) {
        v %= p;
        return v < 0 ? v + p : v;
    }
    // common representation: (a-value, b-value, modulus or 0)
    static std::tuple<std::int64_t, std::int64_t, std::int64_t> align(const GFp& a, const GFp& b) {
        std::int64_t p = a.p_ ? a.p_ : b.p_;
        if (a.p_ && b.p_ && a.p_ != b.p_) throw InternalInconsistency("mixed GF(p) moduli");
        if (!p) return {a.v_, b.v_, 0};
        return {mod(a.v_, p), mod(b.v_, p), p};
    }

    std::int64_t v_ = 0;
    std::int64_t p_ = 0;
};

// --- uniform helpers the generic code relies on ---

inline bool is_zero(const Rational& x) { return x.is_zero(); }
inline bool is_zero(const GFp& x) {
    return x.modulus() ? x.value() == 0 : (x.value() == 0 || false);
}

inline Rational inv(const Rational& x) {
    if (is_zero(x)) throw DivisionByZero();
    return 1 / x;
}
inline GFp inv(const GFp& x) { return x.inverse(); }

inline std::string coeff_str(const Rational& x) { return x.str(); }
inline std::string coeff_str(const GFp& x) { return std::to_string(x.value()); }

template <class K>
K parse_coeff(const std::string& s, const FieldSpec& spec);

template <>
inline Rational parse_coeff<Rational>(const std::string& s, const FieldSpec&) {
    try {
        return Rational(s);
    } catch (const std::exception&) {
        throw ParseError("bad rational literal: " + s);
    }
}

template <>
inline GFp parse_coeff<GFp>(const std::string& s, const FieldSpec& spec) {
    try {
        return GFp::make(spec.p, std::stoll(s));
    } catch (const std::exception&) {
        throw ParseError("bad GF(p) literal: " + s);
    }
}

template <class K>
K make_elem(const FieldSpec& spec, std::int64_t v);

template <>
inline Rational make_elem<Rational>(const FieldSpec&, std::int64_t v) {
    return Rational(v);
}
template <>
inline GFp make_elem<GFp>(const FieldSpec& spec, std::int64_t v) {
    return GFp::make(spec.p, v);
}

/// Random field element: uniform residue for GF(p), a small integer for Q.
template <class K>
K random_elem(std::mt19937_64& rng, const FieldSpec& spec);

template <>
inline Rational random_elem<Rational>(std::mt19937_64& rng, const FieldSpec&) {
    std::uniform_int_distribution<int> d(-9, 9);
    return Rational(d(rng));
}
template <>
inline GFp random_elem<GFp>(std::mt19937_64& rng, const FieldSpec& spec) {
    std::uniform_int_distribution<std::int64_t> d(0, spec.p - 1);
    return GFp::make(spec.p, d(rng));
}

template <class K>
const char* field_name();
template <>
inline const char* field_name<Rational>() {
    return "rational";
}
template <>
inline const char* field_name<GFp>() {
    return "prime";
}

}  // namespace reeslift

#endif
