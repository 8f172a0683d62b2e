#ifndef REESLIFT_LINALG_HPP
#define REESLIFT_LINALG_HPP

#include <optional>
#include <vector>

#include "errors.hpp"
#include "field.hpp"

namespace reeslift {

/// Dense exact matrix. Row-major; all elimination is deterministic
/// (leftmost pivot, rows scanned top-down) so downstream generator
/// choices are reproducible.
template <class K>
class Matrix {
  public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    K& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const K& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    /// In-place reduced row echelon form; returns the pivot column of each pivot row.
    std::vector<std::size_t> rref() {
        std::vector<std::size_t> pivots;
        std::size_t row = 0;
        for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
            std::size_t sel = row;
            while (sel < rows_ && is_zero(at(sel, col))) ++sel;
            if (sel == rows_) continue;
            if (sel != row)
                for (std::size_t c = 0; c < cols_; ++c) std::swap(at(sel, c), at(row, c));
            K piv = inv(at(row, col));
            for (std::size_t c = col; c < cols_; ++c) at(row, c) = at(row, c) * piv;
            for (std::size_t r = 0; r < rows_; ++r) {
                if (r == row || is_zero(at(r, col))) continue;
                K f = at(r, col);
                for (std::size_t c = col; c < cols_; ++c) at(r, c) = at(r, c) - f * at(row, c);
            }
            pivots.push_back(col);
            ++row;
        }
        return pivots;
    }

    std::size_t rank() const {
        Matrix m = *this;
        return m.rref().size();
    }

    /// Basis of ker(M) in reduced column-echelon form, one vector per free
    /// column, ordered by free-column index.
    std::vector<std::vector<K>> nullspace() const {
        Matrix m = *this;
        auto pivots = m.rref();
        std::vector<bool> is_pivot(cols_, false);
        for (auto c : pivots) is_pivot[c] = true;
        std::vector<std::vector<K>> basis;
        for (std::size_t free = 0; free < cols_; ++free) {
            if (is_pivot[free]) continue;
            std::vector<K> v(cols_);
            v[free] = K(1);
            for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m.at(r, free);
            basis.push_back(std::move(v));
        }
        return basis;
    }

    /// Any x with M x = b (free variables zeroed), or nullopt when inconsistent.
    std::optional<std::vector<K>> solve(const std::vector<K>& b) const {
        if (b.size() != rows_) throw DimensionMismatch("solve rhs");
        Matrix aug(rows_, cols_ + 1);
        for (std::size_t r = 0; r < rows_; ++r) {
            for (std::size_t c = 0; c < cols_; ++c) aug.at(r, c) = at(r, c);
            aug.at(r, cols_) = b[r];
        }
        auto pivots = aug.rref();
        if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;
        std::vector<K> x(cols_);
        for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(r, cols_);
        return x;
    }

    std::vector<K> mul(const std::vector<K>& x) const {
        if (x.size() != cols_) throw DimensionMismatch("matrix-vector product");
        std::vector<K> y(rows_);
        for (std::size_t r = 0; r < rows_; ++r) {
            K acc{};
            for (std::size_t c = 0; c < cols_; ++c)
                if (!is_zero(x[c])) acc = acc + at(r, c) * x[c];
            y[r] = acc;
        }
        return y;
    }

  private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<K> a_;
};

}  // namespace reeslift

#endif
