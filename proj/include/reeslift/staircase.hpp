#ifndef REESLIFT_STAIRCASE_HPP
#define REESLIFT_STAIRCASE_HPP

#include <algorithm>
#include <tuple>
#include <vector>

#include "errors.hpp"

namespace reeslift {

/// A minimal monomial generator (i,j,k) of the weighted staircase
/// { i + mu1*j + mu2*k >= d - mu }, together with its slack s.
struct StaircaseGen {
    int i = 0, j = 0, k = 0;
    int s = 0;

    friend bool operator==(const StaircaseGen& a, const StaircaseGen& b) {
        return a.i == b.i && a.j == b.j && a.k == b.k && a.s == b.s;
    }
};

/// Minimal generators, sorted lexicographically by (i,j,k). Minimality is the
/// three-decrement test: a member stays a member after decrementing any
/// coordinate only if the decrement leaves the region (the weight function is
/// monotone, so this local test is exact).
inline std::vector<StaircaseGen> staircase_min_gens(int mu1, int mu2, int d) {
    if (!(0 <= mu1 && mu1 <= mu2 && mu1 + mu2 <= d / 2 && d >= 2 && mu2 >= 1))
        throw InvalidParameters("staircase parameters out of range");
    int mu = mu1 + mu2;
    int bound = d - mu;
    auto weight = [&](int i, int j, int k) { return i + mu1 * j + mu2 * k; };
    auto member = [&](int i, int j, int k) {
        return i >= 0 && j >= 0 && k >= 0 && weight(i, j, k) >= bound;
    };
    int jmax = mu1 > 0 ? (bound + mu1 - 1) / mu1 : 0;
    int kmax = (bound + mu2 - 1) / mu2;
    std::vector<StaircaseGen> out;
    for (int i = 0; i <= bound; ++i)
        for (int j = 0; j <= jmax; ++j)
            for (int k = 0; k <= kmax; ++k) {
                if (!member(i, j, k)) continue;
                if (member(i - 1, j, k) || member(i, j - 1, k) || member(i, j, k - 1)) continue;
                if (mu1 == 0 && j > 0) continue;  // j-decrement keeps the weight
                StaircaseGen g{i, j, k, i + (j + 1) * mu1 + (k + 1) * mu2 - d};
                if (g.s < 0 || g.s >= mu2 || (g.i > 0 && g.s != 0))
                    throw InternalInconsistency("staircase slack out of range");
                out.push_back(g);
            }
    std::sort(out.begin(), out.end(), [](const StaircaseGen& a, const StaircaseGen& b) {
        return std::tie(a.i, a.j, a.k) < std::tie(b.i, b.j, b.k);
    });
    return out;
}

/// Size of the lifted generating family: sum of (s + 1) over the generators.
inline int psi_count(const std::vector<StaircaseGen>& gens) {
    int n = 0;
    for (const auto& g : gens) n += g.s + 1;
    return n;
}

}  // namespace reeslift

#endif
