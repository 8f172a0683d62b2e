#ifndef REESLIFT_REES_SPACE_HPP
#define REESLIFT_REES_SPACE_HPP

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "mubasis.hpp"
#include "poly.hpp"
#include "ringmaps.hpp"
#include "scroll.hpp"
#include "staircase.hpp"

namespace reeslift {

/// A trihomogeneous preimage of a binary form under Xi -> T0^{mu1-i}T1^i,
/// Yi -> T0^{mu2-i}T1^i (each X/Y factor also eats one T-degree of weight).
template <class K>
struct TriLift {
    BinaryForm<K> target;
    MultiPoly<K> lift;
    int i = 0, j = 0, k = 0;
};

/// Deterministic lift of h (degree i + j*mu1 + k*mu2) with tridegree (i,j,k):
/// per monomial of h, the T1-weight is allocated greedily into the Y-block
/// (each factor carries up to mu2), then the X-block, then the bare T1
/// exponent. The substitution identity is re-verified before returning.
template <class K>
TriLift<K> tri_lift(const BinaryForm<K>& h, int i, int j, int k,
                    std::shared_ptr<const VarSpace> space) {
    int mu1 = space->mu1, mu2 = space->mu2;
    if (h.degree() != i + j * mu1 + k * mu2) throw DegreeMismatch("tri_lift target degree");
    TriLift<K> out;
    out.target = h;
    out.i = i;
    out.j = j;
    out.k = k;
    out.lift = MultiPoly<K>(space);
    int xbase = 2, ybase = 2 + mu1 + 1;
    for (int v = 0; v <= h.degree(); ++v) {
        const K& c = h.c[static_cast<std::size_t>(v)];
        if (is_zero(c)) continue;
        Monomial m(space->nvars(), 0);
        int rem = v;
        for (int f = 0; f < k; ++f) {
            int w = std::min(rem, mu2);
            ++m[static_cast<std::size_t>(ybase + w)];
            rem -= w;
        }
        for (int f = 0; f < j; ++f) {
            int w = std::min(rem, mu1);
            ++m[static_cast<std::size_t>(xbase + w)];
            rem -= w;
        }
        if (rem > i) throw InternalInconsistency("tri_lift weight overflow");
        m[0] = i - rem;
        m[1] = rem;
        out.lift.add_term(m, c);
    }
    // substitute the blocks back and compare with the target
    BinaryForm<K> img(h.degree());
    for (const auto& [m, c] : out.lift.terms()) {
        int v = m[1];
        for (int t = 0; t <= mu1; ++t) v += m[static_cast<std::size_t>(xbase + t)] * t;
        for (int t = 0; t <= mu2; ++t) v += m[static_cast<std::size_t>(ybase + t)] * t;
        img.c[static_cast<std::size_t>(v)] = img.c[static_cast<std::size_t>(v)] + c;
    }
    if (!(img == h)) throw InternalInconsistency("tri_lift image mismatch");
    return out;
}

/// One lifted generator: Psi = A-part - B-part, where both parts lift
/// alpha (resp. beta) times T0^t T1^{s-t}.
template <class K>
struct PsiGenerator {
    StaircaseGen stair;
    int t = 0;
    MultiPoly<K> a_part, b_part, psi;
};

template <class K>
PsiGenerator<K> psi_generator(const ScrollCurve<K>& sc, const StaircaseGen& g, int t,
                              std::shared_ptr<const VarSpace> space) {
    if (t < 0 || t > g.s) throw InvalidParameters("t out of [0, s]");
    PsiGenerator<K> out;
    out.stair = g;
    out.t = t;
    auto tt = BinaryForm<K>::monomial(t, g.s - t);
    out.a_part = tri_lift(sc.alpha * tt, g.i, g.j, g.k + 1, space).lift;
    out.b_part = tri_lift(sc.beta * tt, g.i, g.j + 1, g.k, space).lift;
    out.psi = out.a_part - out.b_part;

    // Phi'(Psi) must equal g * X^j Y^k T0^t T1^{s-t} exactly
    auto pp = map_phi_prime<K>(sc.mu1, sc.mu2);
    auto scr = pp.dst;
    Monomial mon(scr->nvars(), 0);
    mon[0] = t;
    mon[1] = g.s - t;
    mon[static_cast<std::size_t>(scr->index_of("X"))] = g.j;
    mon[static_cast<std::size_t>(scr->index_of("Y"))] = g.k;
    auto expected = g_form(sc).times_monomial(mon);
    if (!(pp.apply(out.psi) == expected))
        throw InternalInconsistency("lifted generator image mismatch");
    return out;
}

/// A labelled generator: the polynomial, where it came from, and its bidegree.
template <class K>
struct LabelledGen {
    MultiPoly<K> poly;
    std::string label;       // e.g. "pencil[2]", "psi(9,0,0;t=0)"
    std::string provenance;  // "scroll-pencil" | "scroll-quadric" | "psi"
    std::pair<int, int> bidegree;
};

template <class K>
struct GeneratorSet {
    std::shared_ptr<const VarSpace> space;
    std::vector<LabelledGen<K>> gens;
    std::vector<StaircaseGen> staircase;
};

/// Full minimal generating set of ker(Phi): the scroll basis plus the lifted
/// family, one member per staircase generator and 0 <= t <= s.
template <class K>
GeneratorSet<K> rees_space_generators(const ScrollCurve<K>& sc) {
    GeneratorSet<K> out;
    auto basis = scroll_generators<K>(sc.mu1, sc.mu2);
    out.space = basis.space;
    std::size_t idx = 0;
    for (const auto& p : basis.pencils)
        out.gens.push_back({p, "pencil[" + std::to_string(idx++) + "]", "scroll-pencil",
                            p.bidegree()});
    idx = 0;
    for (const auto& q : basis.quadrics)
        out.gens.push_back({q, "quadric[" + std::to_string(idx++) + "]", "scroll-quadric",
                            q.bidegree()});
    out.staircase = staircase_min_gens(sc.mu1, sc.mu2, sc.d);
    for (const auto& g : out.staircase)
        for (int t = 0; t <= g.s; ++t) {
            auto psi = psi_generator(sc, g, t, out.space);
            std::string label = "psi(" + std::to_string(g.i) + "," + std::to_string(g.j) + "," +
                                std::to_string(g.k) + ";t=" + std::to_string(t) + ")";
            out.gens.push_back({psi.psi, label, "psi", psi.psi.bidegree()});
        }
    return out;
}

}  // namespace reeslift

#endif
