#ifndef REESLIFT_PLANE_REES_HPP
#define REESLIFT_PLANE_REES_HPP

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mubasis.hpp"
#include "poly.hpp"
#include "rees_space.hpp"
#include "ringmaps.hpp"

namespace reeslift {

/// (p-form, q-form), with the p-form re-checked against its determinant
/// presentation det[[Z0,Z1,Z2],[A row],[B row]].
template <class K>
std::pair<MultiPoly<K>, MultiPoly<K>> pq_forms(const MuData<K>& md) {
    auto sp = VarSpace::tz();
    auto P = p_form(md);
    MultiPoly<K> det(sp);
    auto f2p = [&](const BinaryForm<K>& f) { return form_to_poly(f, sp); };
    auto Z = [&](int j) { return MultiPoly<K>::variable(sp, 2 + j); };
    det = det + Z(0) * (f2p(md.A[1]) * f2p(md.B[2]) - f2p(md.A[2]) * f2p(md.B[1]));
    det = det - Z(1) * (f2p(md.A[0]) * f2p(md.B[2]) - f2p(md.A[2]) * f2p(md.B[0]));
    det = det + Z(2) * (f2p(md.A[0]) * f2p(md.B[1]) - f2p(md.A[1]) * f2p(md.B[0]));
    if (!(det == P)) throw InternalInconsistency("p-form determinant identity fails");
    return {P, q_form(md)};
}

/// F together with a decomposition F = p0 F^(0) + p1 F^(1) + p2 F^(2),
/// the components one T-degree step (mu) below F.
template <class K>
struct DOperand {
    MultiPoly<K> F;
    std::array<MultiPoly<K>, 3> comp;
};

namespace detail {

/// Split a bihomogeneous polynomial in K[T,Z] by Z-monomial; values are the
/// T-coefficient binary forms of degree i.
template <class K>
std::map<Monomial, BinaryForm<K>, GrevlexGreater> split_by_z(const MultiPoly<K>& F, int i) {
    std::map<Monomial, BinaryForm<K>, GrevlexGreater> out;
    for (const auto& [m, c] : F.terms()) {
        Monomial zm = m;
        zm[0] = 0;
        zm[1] = 0;
        auto [it, fresh] = out.emplace(zm, BinaryForm<K>(i));
        it->second.c[static_cast<std::size_t>(m[1])] =
            it->second.c[static_cast<std::size_t>(m[1])] + c;
    }
    return out;
}

/// Matrix of (u_1..u_r) -> sum g_l u_l on K[T]_n, for forms g_l of degree dg.
template <class K>
Matrix<K> combination_matrix(const std::vector<BinaryForm<K>>& g, int n) {
    int dg = g[0].degree();
    Matrix<K> M(static_cast<std::size_t>(n + dg + 1),
                g.size() * static_cast<std::size_t>(n + 1));
    for (std::size_t l = 0; l < g.size(); ++l)
        for (int s = 0; s <= n; ++s)
            for (int r = 0; r <= dg; ++r)
                M.at(static_cast<std::size_t>(s + r), l * static_cast<std::size_t>(n + 1) +
                                                          static_cast<std::size_t>(s)) =
                    g[l].c[static_cast<std::size_t>(r)];
    return M;
}

}  // namespace detail

/// Solve F = p0 F^(0) + p1 F^(1) + p2 F^(2) coefficient-wise per Z-monomial.
/// Deterministic (free variables zeroed). Succeeds exactly when every
/// T-coefficient of F lies in the degree slice of <p0,p1,p2>.
template <class K>
DOperand<K> express_in_p(const MultiPoly<K>& F, const MuData<K>& md) {
    auto [i, j] = F.bidegree();
    int n = i - md.mu;
    if (n < 0) throw NotInPIdeal();
    DOperand<K> out;
    out.F = F;
    for (auto& c : out.comp) c = MultiPoly<K>(F.space());
    std::vector<BinaryForm<K>> p(md.p.begin(), md.p.end());
    auto M = detail::combination_matrix(p, n);
    for (const auto& [zm, cf] : detail::split_by_z(F, i)) {
        auto sol = M.solve(cf.c);
        if (!sol) throw NotInPIdeal();
        for (int l = 0; l < 3; ++l)
            for (int s = 0; s <= n; ++s) {
                const K& u = (*sol)[static_cast<std::size_t>(l * (n + 1) + s)];
                if (is_zero(u)) continue;
                Monomial m = zm;
                m[0] = n - s;
                m[1] = s;
                out.comp[static_cast<std::size_t>(l)].add_term(m, u);
            }
    }
    auto check = MultiPoly<K>(F.space());
    for (int l = 0; l < 3; ++l)
        check = check + form_to_poly(md.p[static_cast<std::size_t>(l)], F.space()) *
                            out.comp[static_cast<std::size_t>(l)];
    if (!(check == F)) throw InternalInconsistency("p-decomposition identity fails");
    return out;
}

namespace detail {

/// det with rows (F^(0),F^(1),F^(2)), (Z0,Z1,Z2), (last row of binary forms).
template <class K>
MultiPoly<K> det_with_row(const DOperand<K>& op, const std::array<BinaryForm<K>, 3>& row) {
    auto sp = op.F.space();
    auto Z = [&](int l) { return MultiPoly<K>::variable(sp, 2 + l); };
    auto r = [&](int l) { return form_to_poly(row[static_cast<std::size_t>(l)], sp); };
    return op.comp[0] * (Z(1) * r(2) - Z(2) * r(1)) - op.comp[1] * (Z(0) * r(2) - Z(2) * r(0)) +
           op.comp[2] * (Z(0) * r(1) - Z(1) * r(0));
}

}  // namespace detail

/// D_B: bidegree (i,j) -> (i - mu2, j + 1); last determinant row is A.
template <class K>
MultiPoly<K> D_B(const MultiPoly<K>& F, const MuData<K>& md) {
    return detail::det_with_row(express_in_p(F, md), md.A);
}

/// D_A: bidegree (i,j) -> (i - mu1, j + 1); last determinant row is B.
template <class K>
MultiPoly<K> D_A(const MultiPoly<K>& F, const MuData<K>& md) {
    return detail::det_with_row(express_in_p(F, md), md.B);
}

enum class RegionStatus { Guaranteed, AttemptedOk, AttemptedFailed, NotGuaranteed };

inline std::string status_name(RegionStatus s) {
    switch (s) {
        case RegionStatus::Guaranteed: return "guaranteed";
        case RegionStatus::AttemptedOk: return "attempted-ok";
        case RegionStatus::AttemptedFailed: return "attempted-failed";
        case RegionStatus::NotGuaranteed: return "not-guaranteed";
    }
    return "?";
}

struct RegionEntry {
    int a = 0, b = 0;
    int i = 0, j = 0;  // bidegree (d - mu - a*mu1 - b*mu2, a + b + 1)
    RegionStatus status = RegionStatus::NotGuaranteed;
};

struct RegionDiagram {
    int d = 0, mu1 = 0, mu2 = 0;
    std::vector<RegionEntry> entries;            // the D_A^a D_B^b lattice
    std::pair<int, int> p_marker, q_marker;      // bidegrees of p and q
    bool da_disabled = false;                    // mu1 == 0: D_A direction dropped
    std::string warning;
};

/// Is D_A^a D_B^b(q) guaranteed to be defined?
inline bool dd_guaranteed(int d, int mu1, int mu2, int a, int b) {
    int mu = mu1 + mu2;
    int i = d - mu - a * mu1 - b * mu2;
    if (a == 0 && b == 0) return true;
    if (b >= 1) return i >= mu - 1;
    return i >= mu + mu2 - mu1 - 1;
}

/// Pure enumeration of the (a,b) lattice: guaranteed members plus the
/// remaining bidegrees with T-degree >= mu (potential generators the method
/// does not certify). Sorted by (b, a).
inline RegionDiagram dd_region(int d, int mu1, int mu2) {
    RegionDiagram out;
    out.d = d;
    out.mu1 = mu1;
    out.mu2 = mu2;
    int mu = mu1 + mu2;
    out.p_marker = {mu, 1};
    out.q_marker = {d - mu, 1};
    if (mu1 == 0) {
        out.da_disabled = true;
        out.warning =
            "split degree 0: the two-operator family is not finite; "
            "only the single-operator column is produced";
    }
    int bmax = mu2 > 0 ? (d - mu) / mu2 : 0;
    for (int b = 0; b <= bmax; ++b) {
        int amax = mu1 > 0 ? (d - mu - b * mu2) / mu1 : 0;
        for (int a = 0; a <= amax; ++a) {
            if (out.da_disabled && a > 0) continue;
            int i = d - mu - a * mu1 - b * mu2;
            bool g = dd_guaranteed(d, mu1, mu2, a, b);
            if (!g && i < mu) continue;
            out.entries.push_back({a, b, i, a + b + 1,
                                   g ? RegionStatus::Guaranteed : RegionStatus::NotGuaranteed});
        }
    }
    return out;
}

template <class K>
struct DDMember {
    int a = 0, b = 0;
    RegionStatus status = RegionStatus::NotGuaranteed;
    std::optional<MultiPoly<K>> poly;
};

template <class K>
struct DDFamily {
    std::vector<DDMember<K>> members;
    RegionDiagram diagram;
};

/// Compute the iterated-operator family over the region lattice. Composites
/// apply D_A a times first, then D_B b times; this order makes every
/// intermediate step land in the range where the p-decomposition is known to
/// exist whenever the final (a,b) is guaranteed. Guaranteed members must
/// compute; non-guaranteed entries are attempted and their outcome recorded.
template <class K>
DDFamily<K> dd_family(const MuData<K>& md) {
    DDFamily<K> out;
    out.diagram = dd_region(md.d(), md.mu1, md.mu2);
    auto q = q_form(md);
    std::map<std::pair<int, int>, std::optional<MultiPoly<K>>> memo;
    memo[{0, 0}] = q;
    auto member = [&](auto&& self, int a, int b) -> const std::optional<MultiPoly<K>>& {
        auto it = memo.find({a, b});
        if (it != memo.end()) return it->second;
        const auto& prev = b > 0 ? self(self, a, b - 1) : self(self, a - 1, 0);
        std::optional<MultiPoly<K>> cur;
        if (prev) {
            try {
                cur = b > 0 ? D_B(*prev, md) : D_A(*prev, md);
            } catch (const NotInPIdeal&) {
            }
        }
        return memo.emplace(std::pair{a, b}, std::move(cur)).first->second;
    };
    for (auto& e : out.diagram.entries) {
        const auto& cur = member(member, e.a, e.b);
        if (e.status == RegionStatus::Guaranteed) {
            if (!cur) throw InternalInconsistency("guaranteed member failed to compute");
        } else {
            e.status = cur ? RegionStatus::AttemptedOk : RegionStatus::AttemptedFailed;
        }
        out.members.push_back({e.a, e.b, e.status, cur});
    }
    return out;
}

/// Region data including computed statuses for the attempted entries.
template <class K>
RegionDiagram region_diagram(const MuData<K>& md) {
    return dd_family(md).diagram;
}

/// Alternate one-step lift: write F = h1 (b1.A) + h2 (b2.A) over a split
/// basis {b1, b2} of the syzygies of B, and return h1 (b1.Z) + h2 (b2.Z).
/// Solvable one degree earlier in T than the determinant operator.
template <class K>
MultiPoly<K> split_basis_A_lift(const MultiPoly<K>& F, const MuData<K>& md) {
    auto [i, j] = F.bidegree();
    // split basis of B by degree stepping
    std::array<std::array<BinaryForm<K>, 3>, 2> b;
    int nu1 = -1;
    for (int m = 0; 2 * m <= md.mu2; ++m) {
        auto sols = detail::syzygies_of_degree(md.B, m);
        if (!sols.empty()) {
            nu1 = m;
            b[0] = sols.front();
            break;
        }
    }
    if (nu1 < 0) throw NotInPAIdeal();
    int nu2 = md.mu2 - nu1;
    auto sols = detail::syzygies_of_degree(md.B, nu2);
    detail::Echelon<K> known;
    for (int a = 0; a <= nu2 - nu1; ++a) {
        std::array<BinaryForm<K>, 3> sh;
        for (int l = 0; l < 3; ++l)
            sh[static_cast<std::size_t>(l)] =
                BinaryForm<K>::monomial(nu2 - nu1 - a, a) * b[0][static_cast<std::size_t>(l)];
        known.add(detail::triple_to_vec(sh));
    }
    bool found = false;
    for (const auto& cand : sols)
        if (!known.contains(detail::triple_to_vec(cand))) {
            b[1] = cand;
            found = true;
            break;
        }
    if (!found) throw NotInPAIdeal();

    std::vector<BinaryForm<K>> pa{dot3(b[0], md.A), dot3(b[1], md.A)};
    std::array<int, 2> deg{nu1 + md.mu1, nu2 + md.mu1};
    auto sp = F.space();
    std::array<MultiPoly<K>, 2> rho{MultiPoly<K>(sp), MultiPoly<K>(sp)};
    std::array<MultiPoly<K>, 2> h{MultiPoly<K>(sp), MultiPoly<K>(sp)};
    for (int l = 0; l < 2; ++l)
        for (int m = 0; m < 3; ++m)
            rho[static_cast<std::size_t>(l)] =
                rho[static_cast<std::size_t>(l)] +
                form_to_poly(b[static_cast<std::size_t>(l)][static_cast<std::size_t>(m)], sp) *
                    MultiPoly<K>::variable(sp, 2 + m);
    // solve per Z-monomial; the two unknown blocks have different T-degrees
    for (const auto& [zm, cf] : detail::split_by_z(F, i)) {
        std::array<int, 2> n{i - deg[0], i - deg[1]};
        if (n[0] < 0) throw NotInPAIdeal();
        std::size_t cols = static_cast<std::size_t>(n[0] + 1) +
                           static_cast<std::size_t>(std::max(n[1] + 1, 0));
        Matrix<K> M(static_cast<std::size_t>(i + 1), cols);
        std::array<std::size_t, 2> off{0, static_cast<std::size_t>(n[0] + 1)};
        for (int l = 0; l < 2; ++l)
            for (int s = 0; s <= n[static_cast<std::size_t>(l)]; ++s)
                for (int r = 0; r <= deg[static_cast<std::size_t>(l)]; ++r)
                    M.at(static_cast<std::size_t>(s + r),
                         off[static_cast<std::size_t>(l)] + static_cast<std::size_t>(s)) =
                        pa[static_cast<std::size_t>(l)].c[static_cast<std::size_t>(r)];
        auto sol = M.solve(cf.c);
        if (!sol) throw NotInPAIdeal();
        for (int l = 0; l < 2; ++l)
            for (int s = 0; s <= n[static_cast<std::size_t>(l)]; ++s) {
                const K& u = (*sol)[off[static_cast<std::size_t>(l)] + static_cast<std::size_t>(s)];
                if (is_zero(u)) continue;
                Monomial m = zm;
                m[0] = n[static_cast<std::size_t>(l)] - s;
                m[1] = s;
                h[static_cast<std::size_t>(l)].add_term(m, u);
            }
    }
    return h[0] * rho[0] + h[1] * rho[1];
}

struct LiftCheckItem {
    int a = 0, b = 0;
    bool pass = false;
};

/// For each guaranteed family member, verify that its lift through the
/// coefficient-substitution map agrees (up to the alternating sign) with the
/// image of the corresponding lifted generator, as an identity of images in
/// the scroll coordinate ring.
template <class K>
std::vector<LiftCheckItem> lift_and_check(const MuData<K>& md, const DDFamily<K>& fam) {
    std::vector<LiftCheckItem> out;
    auto gamma = map_Gamma(md);
    auto pp = map_phi_prime<K>(md.mu1, md.mu2);
    auto sc = md.scroll_curve();
    auto space = gamma.dst;
    for (const auto& m : fam.members) {
        if (m.status != RegionStatus::Guaranteed || !m.poly) continue;
        int i = md.d() - md.mu - m.a * md.mu1 - m.b * md.mu2;
        StaircaseGen g{i, m.a, m.b, 0};
        auto psi = psi_generator(sc, g, 0, space);
        auto lhs = pp.apply(gamma.apply(*m.poly));
        auto rhs = pp.apply(psi.psi);
        if (m.b % 2 == 0) rhs = -rhs;
        bool ok = lhs == rhs;
        if (!ok)
            throw CongruenceFailed("member (" + std::to_string(m.a) + "," + std::to_string(m.b) +
                                   ")");
        out.push_back({m.a, m.b, ok});
    }
    return out;
}

}  // namespace reeslift

#endif
