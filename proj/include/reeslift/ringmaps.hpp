#ifndef REESLIFT_RINGMAPS_HPP
#define REESLIFT_RINGMAPS_HPP

#include <memory>
#include <string>
#include <vector>

#include "mubasis.hpp"
#include "poly.hpp"

namespace reeslift {

/// A ring homomorphism given by a substitution table (one image polynomial
/// per source variable). Immutable once built; application is pure.
template <class K>
struct RingMap {
    std::string name;
    std::shared_ptr<const VarSpace> src, dst;
    std::vector<MultiPoly<K>> images;

    MultiPoly<K> apply(const MultiPoly<K>& F) const {
        if (!F.space() || !(*F.space() == *src)) throw SpaceMismatch();
        MultiPoly<K> r(dst);
        for (const auto& [m, c] : F.terms()) {
            MultiPoly<K> t = MultiPoly<K>::constant(dst, c);
            for (std::size_t v = 0; v < m.size(); ++v)
                for (int e = 0; e < m[v]; ++e) t = t * images[v];
            r = r + t;
        }
        return r;
    }
};

namespace detail {

template <class K>
MultiPoly<K> t_monomial(std::shared_ptr<const VarSpace> sp, int a, int b) {
    Monomial m(sp->nvars(), 0);
    m[0] = a;
    m[1] = b;
    return MultiPoly<K>(sp, m, K(1));
}

}  // namespace detail

/// Xi -> T0^{mu1-i} T1^i X, Yi -> T0^{mu2-i} T1^i Y.
template <class K>
RingMap<K> map_phi_prime(int mu1, int mu2) {
    RingMap<K> m;
    m.name = "PhiPrime";
    m.src = VarSpace::blocks(mu1, mu2);
    m.dst = VarSpace::scroll(mu1, mu2);
    int xv = m.dst->index_of("X"), yv = m.dst->index_of("Y");
    m.images.push_back(MultiPoly<K>::variable(m.dst, 0));
    m.images.push_back(MultiPoly<K>::variable(m.dst, 1));
    for (int i = 0; i <= mu1; ++i)
        m.images.push_back(detail::t_monomial<K>(m.dst, mu1 - i, i) *
                           MultiPoly<K>::variable(m.dst, xv));
    for (int i = 0; i <= mu2; ++i)
        m.images.push_back(detail::t_monomial<K>(m.dst, mu2 - i, i) *
                           MultiPoly<K>::variable(m.dst, yv));
    return m;
}

/// X -> alpha s, Y -> beta s.
template <class K>
RingMap<K> map_phi(const ScrollCurve<K>& sc) {
    RingMap<K> m;
    m.name = "phi";
    m.src = VarSpace::scroll(sc.mu1, sc.mu2);
    m.dst = VarSpace::rees(sc.d);
    auto s = MultiPoly<K>::variable(m.dst, m.dst->index_of("s"));
    m.images.push_back(MultiPoly<K>::variable(m.dst, 0));
    m.images.push_back(MultiPoly<K>::variable(m.dst, 1));
    m.images.push_back(form_to_poly(sc.alpha, m.dst) * s);
    m.images.push_back(form_to_poly(sc.beta, m.dst) * s);
    return m;
}

/// Xi -> alpha T0^{mu1-i} T1^i s, Yi -> beta T0^{mu2-i} T1^i s.
template <class K>
RingMap<K> map_Phi(const ScrollCurve<K>& sc) {
    RingMap<K> m;
    m.name = "Phi";
    m.src = VarSpace::blocks(sc.mu1, sc.mu2);
    m.dst = VarSpace::rees(sc.d);
    auto s = MultiPoly<K>::variable(m.dst, m.dst->index_of("s"));
    auto a = form_to_poly(sc.alpha, m.dst) * s;
    auto b = form_to_poly(sc.beta, m.dst) * s;
    m.images.push_back(MultiPoly<K>::variable(m.dst, 0));
    m.images.push_back(MultiPoly<K>::variable(m.dst, 1));
    for (int i = 0; i <= sc.mu1; ++i) m.images.push_back(detail::t_monomial<K>(m.dst, sc.mu1 - i, i) * a);
    for (int i = 0; i <= sc.mu2; ++i) m.images.push_back(detail::t_monomial<K>(m.dst, sc.mu2 - i, i) * b);
    return m;
}

/// Zj -> (coefficient row of A_j) . Xvec + (coefficient row of B_j) . Yvec.
template <class K>
RingMap<K> map_Gamma(const MuData<K>& md) {
    RingMap<K> m;
    m.name = "Gamma";
    m.src = VarSpace::tz();
    m.dst = VarSpace::blocks(md.mu1, md.mu2);
    m.images.push_back(MultiPoly<K>::variable(m.dst, 0));
    m.images.push_back(MultiPoly<K>::variable(m.dst, 1));
    for (int j = 0; j < 3; ++j) {
        MultiPoly<K> img(m.dst);
        for (int i = 0; i <= md.mu1; ++i) {
            const K& a = md.A[static_cast<std::size_t>(j)].c[static_cast<std::size_t>(i)];
            if (!is_zero(a))
                img = img + MultiPoly<K>::variable(m.dst, m.dst->index_of("X" + std::to_string(i)))
                                .scaled(a);
        }
        for (int i = 0; i <= md.mu2; ++i) {
            const K& b = md.B[static_cast<std::size_t>(j)].c[static_cast<std::size_t>(i)];
            if (!is_zero(b))
                img = img + MultiPoly<K>::variable(m.dst, m.dst->index_of("Y" + std::to_string(i)))
                                .scaled(b);
        }
        m.images.push_back(img);
    }
    return m;
}

/// Zj -> A_j X + B_j Y.
template <class K>
RingMap<K> map_Omega(const MuData<K>& md) {
    RingMap<K> m;
    m.name = "Omega";
    m.src = VarSpace::tz();
    m.dst = VarSpace::scroll(md.mu1, md.mu2);
    auto X = MultiPoly<K>::variable(m.dst, m.dst->index_of("X"));
    auto Y = MultiPoly<K>::variable(m.dst, m.dst->index_of("Y"));
    m.images.push_back(MultiPoly<K>::variable(m.dst, 0));
    m.images.push_back(MultiPoly<K>::variable(m.dst, 1));
    for (int j = 0; j < 3; ++j)
        m.images.push_back(form_to_poly(md.A[static_cast<std::size_t>(j)], m.dst) * X +
                           form_to_poly(md.B[static_cast<std::size_t>(j)], m.dst) * Y);
    return m;
}

/// Zj -> f_j s.
template <class K>
RingMap<K> map_psi(const ParamCurve<K>& curve) {
    RingMap<K> m;
    m.name = "psi";
    m.src = VarSpace::tz();
    m.dst = VarSpace::rees(curve.d);
    auto s = MultiPoly<K>::variable(m.dst, m.dst->index_of("s"));
    m.images.push_back(MultiPoly<K>::variable(m.dst, 0));
    m.images.push_back(MultiPoly<K>::variable(m.dst, 1));
    for (int j = 0; j < 3; ++j)
        m.images.push_back(form_to_poly(curve.f[static_cast<std::size_t>(j)], m.dst) * s);
    return m;
}

/// g = alpha Y - beta X in K[T,X,Y]; generates the kernel of phi.
template <class K>
MultiPoly<K> g_form(const ScrollCurve<K>& sc) {
    auto sp = VarSpace::scroll(sc.mu1, sc.mu2);
    auto X = MultiPoly<K>::variable(sp, sp->index_of("X"));
    auto Y = MultiPoly<K>::variable(sp, sp->index_of("Y"));
    return form_to_poly(sc.alpha, sp) * Y - form_to_poly(sc.beta, sp) * X;
}

/// det [[Z0,Z1,Z2],[A row],[B row]] = p0 Z0 + p1 Z1 + p2 Z2 in K[T,Z].
template <class K>
MultiPoly<K> p_form(const MuData<K>& md) {
    auto sp = VarSpace::tz();
    MultiPoly<K> r(sp);
    for (int j = 0; j < 3; ++j)
        r = r + form_to_poly(md.p[static_cast<std::size_t>(j)], sp) *
                    MultiPoly<K>::variable(sp, 2 + j);
    return r;
}

template <class K>
MultiPoly<K> q_form(const MuData<K>& md) {
    auto sp = VarSpace::tz();
    MultiPoly<K> r(sp);
    for (int j = 0; j < 3; ++j)
        r = r + form_to_poly(md.q[static_cast<std::size_t>(j)], sp) *
                    MultiPoly<K>::variable(sp, 2 + j);
    return r;
}

/// F in K[T,Xblk,Yblk] lies in ker(Phi) iff g divides PhiPrime(F).
template <class K>
bool in_I(const MultiPoly<K>& F, const ScrollCurve<K>& sc) {
    if (!F.bihomogeneous()) throw NotHomogeneous();
    auto img = map_phi_prime<K>(sc.mu1, sc.mu2).apply(F);
    if (img.zero()) return true;
    return try_divide(img, g_form(sc)).has_value();
}

/// F in K[T,Z] lies in ker(psi) iff g divides Omega(F).
template <class K>
bool in_K(const MultiPoly<K>& F, const MuData<K>& md) {
    if (!F.bihomogeneous()) throw NotHomogeneous();
    auto img = map_Omega(md).apply(F);
    if (img.zero()) return true;
    return try_divide(img, g_form(md.scroll_curve())).has_value();
}

/// F in K[T,Z] lies in ker(Omega) iff the p-form divides F.
template <class K>
bool in_ker_omega(const MultiPoly<K>& F, const MuData<K>& md) {
    if (F.zero()) return true;
    return try_divide(F, p_form(md)).has_value();
}

}  // namespace reeslift

#endif
