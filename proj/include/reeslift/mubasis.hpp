#ifndef REESLIFT_MUBASIS_HPP
#define REESLIFT_MUBASIS_HPP

#include <array>
#include <optional>
#include <random>
#include <vector>

#include "binform.hpp"
#include "errors.hpp"
#include "field.hpp"
#include "linalg.hpp"

namespace reeslift {

/// Plane-curve input: f = (f0, f1, f2), degree-d binary forms with gcd 1.
template <class K>
struct ParamCurve {
    FieldSpec field;
    int d = 0;
    std::array<BinaryForm<K>, 3> f;
};

/// Space-curve input: the scroll data (alpha, beta, mu1, mu2, d).
template <class K>
struct ScrollCurve {
    FieldSpec field;
    int d = 0, mu1 = 0, mu2 = 0;
    BinaryForm<K> alpha, beta;
    int mu() const { return mu1 + mu2; }
};

/// Normalized syzygy data of a plane curve. Invariants (all exact):
/// p.f = q.f = 0, A.p = B.p = 0, f = signed minors of (p;q),
/// p = signed minors of (A;B), f = alpha*A + beta*B, and
/// alpha = -(q.B), beta = q.A.
template <class K>
struct MuData {
    ParamCurve<K> curve;
    std::array<BinaryForm<K>, 3> p, q, A, B;
    int mu = 0, mu1 = 0, mu2 = 0;
    BinaryForm<K> alpha, beta;

    int d() const { return curve.d; }
    ScrollCurve<K> scroll_curve() const { return {curve.field, curve.d, mu1, mu2, alpha, beta}; }
};

/// Signed 2x2 minors of the rows (u; v): the Hilbert-Burch convention
/// (m0, m1, m2) = (u1 v2 - u2 v1, u2 v0 - u0 v2, u0 v1 - u1 v0).
template <class K>
std::array<BinaryForm<K>, 3> signed_minors(const std::array<BinaryForm<K>, 3>& u,
                                           const std::array<BinaryForm<K>, 3>& v) {
    return {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
}

namespace detail {

template <class K>
std::vector<K> triple_to_vec(const std::array<BinaryForm<K>, 3>& h) {
    std::vector<K> v;
    for (const auto& form : h) v.insert(v.end(), form.c.begin(), form.c.end());
    return v;
}

template <class K>
std::array<BinaryForm<K>, 3> vec_to_triple(const std::vector<K>& v, int m) {
    std::array<BinaryForm<K>, 3> h{BinaryForm<K>(m), BinaryForm<K>(m), BinaryForm<K>(m)};
    for (int j = 0; j < 3; ++j)
        for (int i = 0; i <= m; ++i) h[j].c[i] = v[static_cast<std::size_t>(j * (m + 1) + i)];
    return h;
}

/// Basis of { h in (K[T]_m)^3 : h . f = 0 } for a triple f of degree df.
template <class K>
std::vector<std::array<BinaryForm<K>, 3>> syzygies_of_degree(const std::array<BinaryForm<K>, 3>& f,
                                                             int m) {
    int df = f[0].degree();
    Matrix<K> M(static_cast<std::size_t>(m + df + 1), static_cast<std::size_t>(3 * (m + 1)));
    for (int j = 0; j < 3; ++j)
        for (int i = 0; i <= m; ++i)
            for (int k = 0; k <= df; ++k)
                M.at(static_cast<std::size_t>(i + k), static_cast<std::size_t>(j * (m + 1) + i)) =
                    f[static_cast<std::size_t>(j)].c[static_cast<std::size_t>(k)];
    std::vector<std::array<BinaryForm<K>, 3>> out;
    for (const auto& v : M.nullspace()) out.push_back(vec_to_triple<K>(v, m));
    return out;
}

/// Incremental echelon over concatenated coefficient vectors, for picking
/// basis elements independent of an already-known span.
template <class K>
class Echelon {
  public:
    /// Reduces v against the rows held so far; returns false (and absorbs the
    /// remainder) if v was independent, true if v lies in the span.
    bool contains(std::vector<K> v) {
        reduce(v);
        if (all_zero(v)) return true;
        absorb(std::move(v));
        return false;
    }
    void add(std::vector<K> v) {
        reduce(v);
        if (!all_zero(v)) absorb(std::move(v));
    }
    std::size_t rank() const { return rows_.size(); }

    /// Rows are kept sorted by lead column, so one ascending pass fully
    /// eliminates every lead position.
    void reduce(std::vector<K>& v) const {
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            K f = v[lead_[r]];
            if (is_zero(f)) continue;
            for (std::size_t c = lead_[r]; c < v.size(); ++c)
                if (!is_zero(rows_[r][c])) v[c] = v[c] - f * rows_[r][c];
        }
    }
    static bool all_zero(const std::vector<K>& v) {
        for (const auto& x : v)
            if (!is_zero(x)) return false;
        return true;
    }

  private:
    void absorb(std::vector<K> v) {
        std::size_t lead = 0;
        while (is_zero(v[lead])) ++lead;
        K piv = inv(v[lead]);
        for (auto& x : v) x = x * piv;
        std::size_t pos = 0;
        while (pos < lead_.size() && lead_[pos] < lead) ++pos;
        rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(v));
        lead_.insert(lead_.begin() + static_cast<std::ptrdiff_t>(pos), lead);
    }
    std::vector<std::vector<K>> rows_;
    std::vector<std::size_t> lead_;
};

template <class K>
bool triple_zero(const std::array<BinaryForm<K>, 3>& h) {
    return h[0].zero() && h[1].zero() && h[2].zero();
}

/// Scale so the leading (highest T0 power) coefficient of the first nonzero
/// component is 1.
template <class K>
void normalize_monic(std::array<BinaryForm<K>, 3>& h) {
    for (auto& form : h) {
        if (form.zero()) continue;
        K lead = inv(form.leading());
        for (auto& f2 : h) f2 = f2.scaled(lead);
        return;
    }
    throw InternalInconsistency("normalizing a zero triple");
}

/// Find lambda with minors(u, v) = lambda * target (exact), scale v by 1/lambda.
template <class K>
void rescale_to_minors(const std::array<BinaryForm<K>, 3>& u, std::array<BinaryForm<K>, 3>& v,
                       const std::array<BinaryForm<K>, 3>& target) {
    auto m = signed_minors(u, v);
    std::optional<K> lambda;
    for (int j = 0; j < 3 && !lambda; ++j)
        for (std::size_t i = 0; i < target[static_cast<std::size_t>(j)].c.size() && !lambda; ++i)
            if (!is_zero(target[static_cast<std::size_t>(j)].c[i]))
                lambda = m[static_cast<std::size_t>(j)].c[i] / target[static_cast<std::size_t>(j)].c[i];
    if (!lambda || is_zero(*lambda))
        throw InternalInconsistency("minor identity cannot be normalized");
    K s = inv(*lambda);
    for (auto& form : v) form = form.scaled(s);
    auto check = signed_minors(u, v);
    for (int j = 0; j < 3; ++j)
        if (!(check[static_cast<std::size_t>(j)] == target[static_cast<std::size_t>(j)]))
            throw InternalInconsistency("minor identity fails after rescaling");
}

}  // namespace detail

template <class K>
BinaryForm<K> gcd3(const std::array<BinaryForm<K>, 3>& f) {
    return gcd_binary_forms(f[0], gcd_binary_forms(f[1], f[2]));
}

template <class K>
void validate(const ParamCurve<K>& curve) {
    if (curve.d <= 1) throw DegreeTooSmall();
    for (const auto& form : curve.f)
        if (form.degree() != curve.d) throw DegreeMismatch("input form degree != d");
    auto g = gcd3(curve.f);
    if (g.degree() > 0) {
        // report the gcd in readable form
        std::string s;
        for (std::size_t i = 0; i < g.c.size(); ++i) {
            if (is_zero(g.c[i])) continue;
            if (!s.empty()) s += " + ";
            s += coeff_str(g.c[i]) + "*T0^" + std::to_string(g.degree() - static_cast<int>(i)) +
                 "*T1^" + std::to_string(i);
        }
        throw CommonFactor(s);
    }
    Matrix<K> M(3, static_cast<std::size_t>(curve.d) + 1);
    for (std::size_t j = 0; j < 3; ++j)
        for (std::size_t i = 0; i <= static_cast<std::size_t>(curve.d); ++i)
            M.at(j, i) = curve.f[j].c[i];
    if (M.rank() != 3) throw LinearlyDependent();
}

/// mu-basis (p, q) of f. Degree-stepping: the first degree with a nonzero
/// syzygy space gives mu and p; q is the first degree-(d-mu) solution
/// independent of K[T]_{d-2mu} * p, rescaled so the signed minors of (p; q)
/// reproduce f exactly.
template <class K>
void syzygy_basis(MuData<K>& md) {
    const auto& f = md.curve.f;
    int d = md.curve.d;
    int mu = -1;
    for (int m = 1; 2 * m <= d; ++m) {
        auto sols = detail::syzygies_of_degree(f, m);
        if (!sols.empty()) {
            mu = m;
            md.p = sols.front();
            break;
        }
    }
    if (mu < 0) throw InternalInconsistency("no mu-basis found up to degree d/2");
    detail::normalize_monic(md.p);
    md.mu = mu;

    auto sols = detail::syzygies_of_degree(f, d - mu);
    detail::Echelon<K> known;
    for (int a = 0; a <= d - 2 * mu; ++a) {
        std::array<BinaryForm<K>, 3> shifted;
        for (int j = 0; j < 3; ++j)
            shifted[static_cast<std::size_t>(j)] =
                BinaryForm<K>::monomial(d - 2 * mu - a, a) * md.p[static_cast<std::size_t>(j)];
        known.add(detail::triple_to_vec(shifted));
    }
    bool found = false;
    for (const auto& cand : sols) {
        if (!known.contains(detail::triple_to_vec(cand))) {
            md.q = cand;
            found = true;
            break;
        }
    }
    if (!found) throw InternalInconsistency("no q independent of p at degree d-mu");
    detail::rescale_to_minors(md.p, md.q, f);
}

/// Split mu-basis (A, B) of p with mu1 <= mu2, normalized so the signed
/// minors of (A; B) equal p exactly.
template <class K>
void mu_split(MuData<K>& md) {
    if (gcd3(md.p).degree() > 0) throw CommonFactorInP();
    int mu1 = -1;
    for (int m = 0; 2 * m <= md.mu; ++m) {
        auto sols = detail::syzygies_of_degree(md.p, m);
        if (!sols.empty()) {
            mu1 = m;
            md.A = sols.front();
            break;
        }
    }
    if (mu1 < 0) throw InternalInconsistency("no split syzygy found up to degree mu/2");
    detail::normalize_monic(md.A);
    md.mu1 = mu1;
    md.mu2 = md.mu - mu1;

    auto sols = detail::syzygies_of_degree(md.p, md.mu2);
    detail::Echelon<K> known;
    for (int a = 0; a <= md.mu2 - md.mu1; ++a) {
        std::array<BinaryForm<K>, 3> shifted;
        for (int j = 0; j < 3; ++j)
            shifted[static_cast<std::size_t>(j)] =
                BinaryForm<K>::monomial(md.mu2 - md.mu1 - a, a) * md.A[static_cast<std::size_t>(j)];
        known.add(detail::triple_to_vec(shifted));
    }
    bool found = false;
    for (const auto& cand : sols) {
        if (!known.contains(detail::triple_to_vec(cand))) {
            md.B = cand;
            found = true;
            break;
        }
    }
    if (!found) throw InternalInconsistency("no B independent of A at degree mu2");
    detail::rescale_to_minors(md.A, md.B, md.p);
}

/// alpha = -(q . B), beta = q . A; the decomposition f = alpha A + beta B is
/// re-verified before returning.
template <class K>
void alpha_beta(MuData<K>& md) {
    md.alpha = dot3(md.q, md.B).scaled(K(-1));
    md.beta = dot3(md.q, md.A);
    for (int j = 0; j < 3; ++j) {
        auto lhs = md.alpha * md.A[static_cast<std::size_t>(j)] + md.beta * md.B[static_cast<std::size_t>(j)];
        if (!(lhs == md.curve.f[static_cast<std::size_t>(j)])) throw DecompositionMismatch();
    }
    if (gcd_binary_forms(md.alpha, md.beta).degree() > 0)
        throw InternalInconsistency("gcd(alpha, beta) != 1");
}

/// Full normalization chain: validate, mu-basis, split, (alpha, beta).
template <class K>
MuData<K> compute_mu_data(const ParamCurve<K>& curve) {
    validate(curve);
    MuData<K> md;
    md.curve = curve;
    syzygy_basis(md);
    mu_split(md);
    alpha_beta(md);
    return md;
}

/// Random curve in the (d, mu1, mu2) stratum: draw A, B, alpha, beta, set
/// f = alpha A + beta B, and keep only draws whose recomputed invariants
/// match the request. Deterministic for a fixed seed.
template <class K>
MuData<K> generate_instance(int d, int mu1, int mu2, const FieldSpec& field, std::uint64_t seed,
                            int max_attempts = 100) {
    if (mu1 < 0 || mu1 > mu2 || 2 * (mu1 + mu2) > d)
        throw InvalidParameters("need 0 <= mu1 <= mu2 and mu1+mu2 <= d/2");
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        std::array<BinaryForm<K>, 3> A, B;
        for (auto& a : A) a = random_form<K>(rng, field, mu1);
        for (auto& b : B) b = random_form<K>(rng, field, mu2);
        auto alpha = random_form<K>(rng, field, d - mu1);
        auto beta = random_form<K>(rng, field, d - mu2);
        ParamCurve<K> curve;
        curve.field = field;
        curve.d = d;
        for (int j = 0; j < 3; ++j)
            curve.f[static_cast<std::size_t>(j)] =
                alpha * A[static_cast<std::size_t>(j)] + beta * B[static_cast<std::size_t>(j)];
        try {
            validate(curve);
            if (gcd_binary_forms(alpha, beta).degree() > 0) continue;
            auto md = compute_mu_data(curve);
            if (md.mu == mu1 + mu2 && md.mu1 == mu1 && md.mu2 == mu2) return md;
        } catch (const ValidationError&) {
            continue;
        }
    }
    throw GenerationFailed("d=" + std::to_string(d) + " mu1=" + std::to_string(mu1) +
                           " mu2=" + std::to_string(mu2));
}

}  // namespace reeslift

#endif
