#ifndef REESLIFT_VARSPACE_HPP
#define REESLIFT_VARSPACE_HPP

#include <memory>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace reeslift {

using Monomial = std::vector<int>;  // exponent vector over a VarSpace

inline int total_degree(const Monomial& m) { return std::accumulate(m.begin(), m.end(), 0); }

/// Graded reverse lexicographic, variable order = index order (T0 > T1 > ...).
/// Ties: scan from the least variable upward; smaller exponent at the first
/// difference wins.
inline int grevlex_compare(const Monomial& a, const Monomial& b) {
    if (a.size() != b.size()) throw SpaceMismatch();
    int da = total_degree(a), db = total_degree(b);
    if (da != db) return da > db ? 1 : -1;
    for (std::size_t v = a.size(); v-- > 0;) {
        if (a[v] != b[v]) return a[v] < b[v] ? 1 : -1;
    }
    return 0;
}

struct GrevlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const { return grevlex_compare(a, b) > 0; }
};

/// Which grading block a variable belongs to, for tridegree queries.
enum class VarBlock { T, Xblk, Yblk, Other };

/// An ambient polynomial ring: named variables with a bigrading and block
/// tags. One VarSpace per ring of the construction: K[T,Z], K[T,Xblk,Yblk],
/// the scroll ring K[T,X,Y], and K[T,s]; cross-ring traffic goes through the
/// named homomorphisms only.
struct VarSpace {
    std::string id;
    std::vector<std::string> names;
    std::vector<std::pair<int, int>> grade;  // bidegree of each variable
    std::vector<VarBlock> block;
    int mu1 = -1, mu2 = -1, d = -1;

    std::size_t nvars() const { return names.size(); }

    int index_of(const std::string& name) const {
        for (std::size_t i = 0; i < names.size(); ++i)
            if (names[i] == name) return static_cast<int>(i);
        throw ParseError("unknown variable " + name + " in space " + id);
    }

    friend bool operator==(const VarSpace& a, const VarSpace& b) { return a.id == b.id; }

    static std::shared_ptr<const VarSpace> t_only() {
        auto s = std::make_shared<VarSpace>();
        s->id = "K[T]";
        s->names = {"T0", "T1"};
        s->grade = {{1, 0}, {1, 0}};
        s->block = {VarBlock::T, VarBlock::T};
        return s;
    }

    static std::shared_ptr<const VarSpace> tz() {
        auto s = std::make_shared<VarSpace>();
        s->id = "K[T,Z]";
        s->names = {"T0", "T1", "Z0", "Z1", "Z2"};
        s->grade = {{1, 0}, {1, 0}, {0, 1}, {0, 1}, {0, 1}};
        s->block = {VarBlock::T, VarBlock::T, VarBlock::Other, VarBlock::Other, VarBlock::Other};
        return s;
    }

    /// K[T, X0..X_mu1, Y0..Y_mu2] with deg T = (1,0), deg X_i = deg Y_i = (0,1).
    static std::shared_ptr<const VarSpace> blocks(int mu1, int mu2) {
        if (mu1 < 0 || mu2 < 0) throw InvalidParameters("negative block size");
        auto s = std::make_shared<VarSpace>();
        s->id = "K[T,Xblk,Yblk](" + std::to_string(mu1) + "," + std::to_string(mu2) + ")";
        s->mu1 = mu1;
        s->mu2 = mu2;
        s->names = {"T0", "T1"};
        s->grade = {{1, 0}, {1, 0}};
        s->block = {VarBlock::T, VarBlock::T};
        for (int i = 0; i <= mu1; ++i) {
            s->names.push_back("X" + std::to_string(i));
            s->grade.emplace_back(0, 1);
            s->block.push_back(VarBlock::Xblk);
        }
        for (int i = 0; i <= mu2; ++i) {
            s->names.push_back("Y" + std::to_string(i));
            s->grade.emplace_back(0, 1);
            s->block.push_back(VarBlock::Yblk);
        }
        return s;
    }

    /// Scroll total coordinate ring K[T,X,Y], toric grading.
    static std::shared_ptr<const VarSpace> scroll(int mu1, int mu2) {
        auto s = std::make_shared<VarSpace>();
        s->id = "K[T,X,Y](" + std::to_string(mu1) + "," + std::to_string(mu2) + ")";
        s->mu1 = mu1;
        s->mu2 = mu2;
        s->names = {"T0", "T1", "X", "Y"};
        s->grade = {{1, 0}, {1, 0}, {-mu1, 1}, {-mu2, 1}};
        s->block = {VarBlock::T, VarBlock::T, VarBlock::Other, VarBlock::Other};
        return s;
    }

    /// Rees target K[T,s] with deg s = (-d, 1).
    static std::shared_ptr<const VarSpace> rees(int d) {
        auto s = std::make_shared<VarSpace>();
        s->id = "K[T,s](" + std::to_string(d) + ")";
        s->d = d;
        s->names = {"T0", "T1", "s"};
        s->grade = {{1, 0}, {1, 0}, {-d, 1}};
        s->block = {VarBlock::T, VarBlock::T, VarBlock::Other};
        return s;
    }
};

}  // namespace reeslift

#endif
