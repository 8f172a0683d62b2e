#ifndef REESLIFT_POLY_HPP
#define REESLIFT_POLY_HPP

#include <array>
#include <cctype>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "binform.hpp"
#include "errors.hpp"
#include "field.hpp"
#include "varspace.hpp"

namespace reeslift {

inline bool coeff_neg(const Rational& x) { return x < 0; }
inline bool coeff_neg(const GFp&) { return false; }
inline Rational coeff_abs(const Rational& x) { return x < 0 ? Rational(-x) : x; }
inline GFp coeff_abs(const GFp& x) { return x; }

inline bool monomial_divides(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

inline Monomial monomial_quotient(const Monomial& b, const Monomial& a) {
    Monomial q(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) q[i] = b[i] - a[i];
    return q;
}

inline Monomial monomial_mul(const Monomial& a, const Monomial& b) {
    Monomial m(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) m[i] = a[i] + b[i];
    return m;
}

inline Monomial monomial_lcm(const Monomial& a, const Monomial& b) {
    Monomial m(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) m[i] = std::max(a[i], b[i]);
    return m;
}

/// Sparse exact-coefficient polynomial over a VarSpace. Terms are stored in
/// descending grevlex order, so begin() is the leading term; no zero
/// coefficients are ever stored.
template <class K>
class MultiPoly {
  public:
    using Space = std::shared_ptr<const VarSpace>;
    using TermMap = std::map<Monomial, K, GrevlexGreater>;

    MultiPoly() = default;
    explicit MultiPoly(Space space) : space_(std::move(space)) {}
    MultiPoly(Space space, const Monomial& m, const K& c) : space_(std::move(space)) {
        if (m.size() != space_->nvars()) throw SpaceMismatch();
        if (!is_zero(c)) terms_.emplace(m, c);
    }

    static MultiPoly constant(Space space, const K& c) {
        return MultiPoly(space, Monomial(space->nvars(), 0), c);
    }
    static MultiPoly variable(Space space, int v, int exp = 1) {
        Monomial m(space->nvars(), 0);
        m[static_cast<std::size_t>(v)] = exp;
        return MultiPoly(space, m, K(1));
    }

    const Space& space() const { return space_; }
    const TermMap& terms() const { return terms_; }
    bool zero() const { return terms_.empty(); }
    std::size_t nterms() const { return terms_.size(); }

    const Monomial& leading_monomial() const {
        if (terms_.empty()) throw ZeroPolynomial();
        return terms_.begin()->first;
    }
    const K& leading_coeff() const {
        if (terms_.empty()) throw ZeroPolynomial();
        return terms_.begin()->second;
    }

    void add_term(const Monomial& m, const K& c) {
        if (is_zero(c)) return;
        auto [it, fresh] = terms_.emplace(m, c);
        if (!fresh) {
            it->second = it->second + c;
            if (is_zero(it->second)) terms_.erase(it);
        }
    }

    friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
        a.check_space(b);
        MultiPoly r = a;
        for (const auto& [m, c] : b.terms_) r.add_term(m, c);
        return r;
    }
    friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
        a.check_space(b);
        MultiPoly r = a;
        for (const auto& [m, c] : b.terms_) r.add_term(m, -c);
        return r;
    }
    MultiPoly operator-() const {
        MultiPoly r(space_);
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
        return r;
    }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        a.check_space(b);
        MultiPoly r(a.space_);
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) r.add_term(monomial_mul(ma, mb), ca * cb);
        return r;
    }
    MultiPoly scaled(const K& s) const {
        MultiPoly r(space_);
        if (is_zero(s)) return r;
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, c * s);
        return r;
    }
    MultiPoly times_monomial(const Monomial& m, const K& c = K(1)) const {
        MultiPoly r(space_);
        if (is_zero(c)) return r;
        for (const auto& [mm, cc] : terms_) r.terms_.emplace(monomial_mul(mm, m), cc * c);
        return r;
    }
    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        a.check_space(b);
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

    /// Common bidegree of all terms under the space's grading.
    std::pair<int, int> bidegree() const {
        if (terms_.empty()) throw ZeroPolynomial();
        std::pair<int, int> deg;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            std::pair<int, int> t{0, 0};
            for (std::size_t v = 0; v < m.size(); ++v) {
                t.first += m[v] * space_->grade[v].first;
                t.second += m[v] * space_->grade[v].second;
            }
            if (first) {
                deg = t;
                first = false;
            } else if (t != deg) {
                throw NotHomogeneous();
            }
        }
        return deg;
    }

    bool bihomogeneous() const {
        if (terms_.empty()) return true;
        try {
            bidegree();
            return true;
        } catch (const NotHomogeneous&) {
            return false;
        }
    }

    /// Common (T, X-block, Y-block) tridegree of all terms.
    std::array<int, 3> tridegree() const {
        if (terms_.empty()) throw ZeroPolynomial();
        std::array<int, 3> deg{};
        bool first = true;
        for (const auto& [m, c] : terms_) {
            std::array<int, 3> t{0, 0, 0};
            for (std::size_t v = 0; v < m.size(); ++v) {
                switch (space_->block[v]) {
                    case VarBlock::T: t[0] += m[v]; break;
                    case VarBlock::Xblk: t[1] += m[v]; break;
                    case VarBlock::Yblk: t[2] += m[v]; break;
                    case VarBlock::Other: break;
                }
            }
            if (first) {
                deg = t;
                first = false;
            } else if (t != deg) {
                throw NotHomogeneous();
            }
        }
        return deg;
    }

    K eval(const std::vector<K>& point) const {
        if (point.size() != space_->nvars()) throw DimensionMismatch("eval point");
        K acc{};
        for (const auto& [m, c] : terms_) {
            K t = c;
            for (std::size_t v = 0; v < m.size(); ++v)
                for (int e = 0; e < m[v]; ++e) t = t * point[v];
            acc = acc + t;
        }
        return acc;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            K a = coeff_abs(c);
            if (first) {
                if (coeff_neg(c)) os << "-";
                first = false;
            } else {
                os << (coeff_neg(c) ? " - " : " + ");
            }
            bool trivial = total_degree(m) == 0;
            bool unit = (a == K(1));
            if (!unit || trivial) os << coeff_str(a);
            bool printed = !unit || trivial;
            for (std::size_t v = 0; v < m.size(); ++v) {
                if (m[v] == 0) continue;
                if (printed) os << "*";
                os << space_->names[v];
                if (m[v] > 1) os << "^" << m[v];
                printed = true;
            }
        }
        return os.str();
    }

    static MultiPoly parse(Space space, const std::string& text, const FieldSpec& spec) {
        MultiPoly r(space);
        std::string s = text;
        if (s == "0" || s.empty()) return r;
        std::size_t pos = 0;
        K sign(1);
        if (s[0] == '-') {
            sign = K(-1);
            pos = 1;
        } else if (s[0] == '+') {
            pos = 1;
        }
        while (pos < s.size()) {
            std::size_t plus = s.find(" + ", pos), minus = s.find(" - ", pos);
            std::size_t end = std::min(plus, minus);
            std::string term = s.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
            r.add_term_from_text(term, sign, spec);
            if (end == std::string::npos) break;
            sign = (end == minus) ? K(-1) : K(1);
            pos = end + 3;
        }
        return r;
    }

  private:
    void add_term_from_text(const std::string& term, const K& sign, const FieldSpec& spec) {
        Monomial m(space_->nvars(), 0);
        K coeff = sign;
        std::size_t pos = 0;
        bool any = false;
        while (pos < term.size()) {
            std::size_t star = term.find('*', pos);
            std::string factor =
                term.substr(pos, star == std::string::npos ? std::string::npos : star - pos);
            if (factor.empty()) throw ParseError("empty factor in term: " + term);
            if (std::isalpha(static_cast<unsigned char>(factor[0]))) {
                std::size_t caret = factor.find('^');
                std::string name = factor.substr(0, caret);
                int exp = 1;
                if (caret != std::string::npos) exp = std::stoi(factor.substr(caret + 1));
                m[static_cast<std::size_t>(space_->index_of(name))] += exp;
            } else {
                coeff = coeff * parse_coeff<K>(factor, spec);
            }
            any = true;
            if (star == std::string::npos) break;
            pos = star + 1;
        }
        if (!any) throw ParseError("empty term");
        add_term(m, coeff);
    }

    void check_space(const MultiPoly& o) const {
        if (!space_ || !o.space_ || !(*space_ == *o.space_)) throw SpaceMismatch();
    }

    Space space_;
    TermMap terms_;
};

/// Exact quotient f / g, or nullopt when g does not divide f.
/// Leading-term elimination under grevlex; sound because the coefficient
/// ring is a field and the order is multiplicative.
template <class K>
std::optional<MultiPoly<K>> try_divide(const MultiPoly<K>& f, const MultiPoly<K>& g) {
    if (g.zero()) throw DivisorZero();
    MultiPoly<K> q(f.space());
    MultiPoly<K> rem = f;
    const Monomial& lg = g.leading_monomial();
    const K& cg = g.leading_coeff();
    while (!rem.zero()) {
        const Monomial& lr = rem.leading_monomial();
        if (!monomial_divides(lg, lr)) return std::nullopt;
        Monomial qm = monomial_quotient(lr, lg);
        K qc = rem.leading_coeff() / cg;
        q.add_term(qm, qc);
        rem = rem - g.times_monomial(qm, qc);
    }
    return q;
}

/// Binary form as an element of any space whose first two variables are T0,T1.
template <class K>
MultiPoly<K> form_to_poly(const BinaryForm<K>& f, std::shared_ptr<const VarSpace> space) {
    MultiPoly<K> r(space);
    int d = f.degree();
    for (int i = 0; i <= d; ++i) {
        if (is_zero(f.c[static_cast<std::size_t>(i)])) continue;
        Monomial m(space->nvars(), 0);
        m[0] = d - i;
        m[1] = i;
        r.add_term(m, f.c[static_cast<std::size_t>(i)]);
    }
    return r;
}

}  // namespace reeslift

#endif
