#ifndef REESLIFT_ORACLE_HPP
#define REESLIFT_ORACLE_HPP

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "linalg.hpp"
#include "poly.hpp"
#include "rees_space.hpp"
#include "ringmaps.hpp"

namespace reeslift {

/// All monomials of one bidegree, grevlex-descending.
struct BidegreeSlice {
    std::shared_ptr<const VarSpace> space;
    int i = 0, j = 0;
    std::vector<Monomial> basis;
};

/// Enumerate the slice. Non-T variables are chosen from the last one down
/// (their second grade is 1 in every space here, and their first grade may
/// be negative), then the leftover first grade is split between T0 and T1.
inline BidegreeSlice slice_for(std::shared_ptr<const VarSpace> space, int i, int j) {
    BidegreeSlice out;
    out.space = space;
    out.i = i;
    out.j = j;
    Monomial m(space->nvars(), 0);
    auto rec = [&](auto&& self, std::size_t v, int rem1, int rem2) -> void {
        if (v == 1) {
            if (rem2 != 0 || rem1 < 0) return;
            for (int t1 = 0; t1 <= rem1; ++t1) {
                m[0] = rem1 - t1;
                m[1] = t1;
                out.basis.push_back(m);
            }
            m[0] = m[1] = 0;
            return;
        }
        auto [g, h] = space->grade[v];
        for (int e = 0; e * h <= rem2; ++e) {
            m[v] = e;
            self(self, v - 1, rem1 - e * g, rem2 - e * h);
        }
        m[v] = 0;
    };
    rec(rec, space->nvars() - 1, i, j);
    std::sort(out.basis.begin(), out.basis.end(), GrevlexGreater{});
    return out;
}

namespace detail {

template <class K>
std::vector<K> to_vec(const MultiPoly<K>& f,
                      const std::map<Monomial, std::size_t, GrevlexGreater>& index) {
    std::vector<K> v(index.size());
    for (const auto& [m, c] : f.terms()) {
        auto it = index.find(m);
        if (it == index.end()) throw InternalInconsistency("monomial outside slice");
        v[it->second] = c;
    }
    return v;
}

inline std::map<Monomial, std::size_t, GrevlexGreater> index_of(const std::vector<Monomial>& ms) {
    std::map<Monomial, std::size_t, GrevlexGreater> idx;
    for (const auto& m : ms) idx.emplace(m, idx.size());
    return idx;
}

}  // namespace detail

/// Nullspace of a ring map restricted to one source slice, returned as
/// polynomials. Brute force: exact linear algebra on the monomial bases.
template <class K>
std::vector<MultiPoly<K>> kernel_at(const RingMap<K>& map, const BidegreeSlice& slice) {
    std::vector<MultiPoly<K>> images;
    std::map<Monomial, std::size_t, GrevlexGreater> tindex;
    for (const auto& m : slice.basis) {
        images.push_back(map.apply(MultiPoly<K>(slice.space, m, K(1))));
        for (const auto& [tm, c] : images.back().terms()) tindex.emplace(tm, 0);
    }
    std::size_t n = 0;
    for (auto& [tm, id] : tindex) id = n++;
    Matrix<K> M(n, slice.basis.size());
    for (std::size_t col = 0; col < images.size(); ++col)
        for (const auto& [tm, c] : images[col].terms()) M.at(tindex.at(tm), col) = c;
    std::vector<MultiPoly<K>> out;
    for (const auto& v : M.nullspace()) {
        MultiPoly<K> f(slice.space);
        for (std::size_t col = 0; col < v.size(); ++col) f.add_term(slice.basis[col], v[col]);
        out.push_back(std::move(f));
    }
    return out;
}

constexpr std::size_t kDefaultOracleBudget = 20000;

/// Dimension of the span of { m * G : G in gens, m monomial, result in slice }.
template <class K>
std::size_t ideal_dim_at(const std::vector<MultiPoly<K>>& gens, const BidegreeSlice& slice,
                         std::size_t budget = kDefaultOracleBudget) {
    auto idx = detail::index_of(slice.basis);
    detail::Echelon<K> ech;
    std::size_t entries = 0;
    for (const auto& G : gens) {
        if (G.zero()) continue;
        auto [gi, gj] = G.bidegree();
        if (gi > slice.i || gj > slice.j) continue;
        auto mult = slice_for(slice.space, slice.i - gi, slice.j - gj);
        entries += mult.basis.size() * slice.basis.size();
        if (entries > budget) throw BudgetExceeded(std::to_string(entries) + " entries");
        for (const auto& m : mult.basis) ech.add(detail::to_vec(G.times_monomial(m), idx));
    }
    return ech.rank();
}

struct MinimalityItem {
    std::string label;
    bool minimal = false;
};

/// For each generator: is it outside the span of same-bidegree multiples of
/// the other generators? All-true certifies the set is minimal.
template <class K>
std::vector<MinimalityItem> minimality_certificate(const std::vector<LabelledGen<K>>& gens,
                                                   std::size_t budget = kDefaultOracleBudget) {
    std::vector<MinimalityItem> out;
    for (std::size_t g = 0; g < gens.size(); ++g) {
        auto slice = slice_for(gens[g].poly.space(), gens[g].bidegree.first,
                               gens[g].bidegree.second);
        auto idx = detail::index_of(slice.basis);
        detail::Echelon<K> ech;
        std::size_t entries = 0;
        for (std::size_t o = 0; o < gens.size(); ++o) {
            if (o == g) continue;
            const auto& [oi, oj] = gens[o].bidegree;
            if (oi > slice.i || oj > slice.j) continue;
            auto mult = slice_for(slice.space, slice.i - oi, slice.j - oj);
            entries += mult.basis.size() * slice.basis.size();
            if (entries > budget) throw BudgetExceeded(std::to_string(entries) + " entries");
            for (const auto& m : mult.basis)
                ech.add(detail::to_vec(gens[o].poly.times_monomial(m), idx));
        }
        std::vector<K> v = detail::to_vec(gens[g].poly, idx);
        ech.reduce(v);
        out.push_back({gens[g].label, !detail::Echelon<K>::all_zero(v)});
    }
    return out;
}

}  // namespace reeslift

#endif
