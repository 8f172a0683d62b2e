#ifndef REESLIFT_SCROLL_HPP
#define REESLIFT_SCROLL_HPP

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "poly.hpp"

namespace reeslift {

/// The quadric presentation of the rational normal scroll ideal in
/// K[T, X0..X_mu1, Y0..Y_mu2]: pencils T1 X_{i-1} - T0 X_i and
/// T1 Y_{j-1} - T0 Y_j, plus the three 2x2-minor families. The listed order
/// is a minimal Groebner basis for grevlex with T0 > T1 > X0 > ... > Y_mu2.
template <class K>
struct ScrollBasis {
    std::shared_ptr<const VarSpace> space;
    std::vector<MultiPoly<K>> pencils;
    std::vector<MultiPoly<K>> quadrics;

    std::vector<MultiPoly<K>> all() const {
        std::vector<MultiPoly<K>> v = pencils;
        v.insert(v.end(), quadrics.begin(), quadrics.end());
        return v;
    }
    std::size_t count() const { return pencils.size() + quadrics.size(); }
};

template <class K>
ScrollBasis<K> scroll_generators(int mu1, int mu2) {
    if (mu1 < 0 || mu1 > mu2) throw InvalidParameters("need 0 <= mu1 <= mu2");
    ScrollBasis<K> b;
    b.space = VarSpace::blocks(mu1, mu2);
    auto sp = b.space;
    auto var = [&](const std::string& n) { return MultiPoly<K>::variable(sp, sp->index_of(n)); };
    auto X = [&](int i) { return var("X" + std::to_string(i)); };
    auto Y = [&](int i) { return var("Y" + std::to_string(i)); };
    auto T0 = MultiPoly<K>::variable(sp, 0);
    auto T1 = MultiPoly<K>::variable(sp, 1);

    for (int i = 1; i <= mu1; ++i) b.pencils.push_back(T1 * X(i - 1) - T0 * X(i));
    for (int j = 1; j <= mu2; ++j) b.pencils.push_back(T1 * Y(j - 1) - T0 * Y(j));
    for (int i = 1; i <= mu1 - 1; ++i)
        for (int j = i; j <= mu1 - 1; ++j) b.quadrics.push_back(X(i) * X(j) - X(i - 1) * X(j + 1));
    for (int i = 1; i <= mu2 - 1; ++i)
        for (int j = i; j <= mu2 - 1; ++j) b.quadrics.push_back(Y(i) * Y(j) - Y(i - 1) * Y(j + 1));
    for (int i = 1; i <= mu1; ++i)
        for (int j = 0; j <= mu2 - 1; ++j) b.quadrics.push_back(X(i) * Y(j) - X(i - 1) * Y(j + 1));
    return b;
}

/// Expected generator count: mu1 + mu2 + C(mu1,2) + C(mu2,2) + mu1*mu2.
inline std::size_t scroll_generator_count(int mu1, int mu2) {
    auto c2 = [](int n) { return static_cast<std::size_t>(n) * (n - 1) / 2; };
    return static_cast<std::size_t>(mu1 + mu2) + c2(mu1) + c2(mu2) +
           static_cast<std::size_t>(mu1) * static_cast<std::size_t>(mu2);
}

template <class K>
struct NormalFormResult {
    MultiPoly<K> remainder;
    std::size_t steps = 0;
};

/// Multivariate division by the basis under grevlex; no remainder term is
/// divisible by any basis leading term.
template <class K>
NormalFormResult<K> normal_form(const MultiPoly<K>& F, const std::vector<MultiPoly<K>>& basis) {
    NormalFormResult<K> out;
    out.remainder = MultiPoly<K>(F.space());
    MultiPoly<K> work = F;
    while (!work.zero()) {
        const Monomial& lm = work.leading_monomial();
        bool reduced = false;
        for (const auto& g : basis) {
            if (!monomial_divides(g.leading_monomial(), lm)) continue;
            Monomial qm = monomial_quotient(lm, g.leading_monomial());
            K qc = work.leading_coeff() / g.leading_coeff();
            work = work - g.times_monomial(qm, qc);
            ++out.steps;
            reduced = true;
            break;
        }
        if (!reduced) {
            out.remainder.add_term(lm, work.leading_coeff());
            work = work - MultiPoly<K>(work.space(), lm, work.leading_coeff());
        }
    }
    return out;
}

template <class K>
NormalFormResult<K> normal_form(const MultiPoly<K>& F, const ScrollBasis<K>& basis) {
    return normal_form(F, basis.all());
}

struct BuchbergerReport {
    std::size_t pairs = 0;
    std::size_t max_steps = 0;
};

/// Verify the claimed Groebner property: every S-polynomial reduces to zero.
template <class K>
BuchbergerReport buchberger_check(const ScrollBasis<K>& basis) {
    auto gens = basis.all();
    BuchbergerReport rep;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        for (std::size_t j = i + 1; j < gens.size(); ++j) {
            const Monomial &li = gens[i].leading_monomial(), &lj = gens[j].leading_monomial();
            Monomial l = monomial_lcm(li, lj);
            MultiPoly<K> s =
                gens[i].times_monomial(monomial_quotient(l, li), inv(gens[i].leading_coeff())) -
                gens[j].times_monomial(monomial_quotient(l, lj), inv(gens[j].leading_coeff()));
            auto nf = normal_form(s, gens);
            ++rep.pairs;
            rep.max_steps = std::max(rep.max_steps, nf.steps);
            if (!nf.remainder.zero())
                throw SPairNonzero("pair (" + std::to_string(i) + "," + std::to_string(j) + ")");
        }
    }
    return rep;
}

}  // namespace reeslift

#endif
