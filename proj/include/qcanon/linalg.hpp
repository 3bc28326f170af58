#pragma once

// Exact dense linear algebra over RatFunc: rank, kernel bases, and linear
// system solving via Gauss-Jordan elimination with deterministic pivoting.

#include <optional>
#include <vector>

#include "qcanon/scalars.hpp"

namespace qcanon {

using QVector = std::vector<RatFunc>;

class QMatrix {
public:
    QMatrix() : rows_(0), cols_(0) {}
    QMatrix(int rows, int cols) : rows_(rows), cols_(cols), e_(size_t(rows) * cols) {}

    static QMatrix identity(int n) {
        QMatrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = RatFunc(1);
        return m;
    }
    static QMatrix from_columns(const std::vector<QVector>& cols) {
        int nc = static_cast<int>(cols.size());
        int nr = nc ? static_cast<int>(cols[0].size()) : 0;
        QMatrix m(nr, nc);
        for (int j = 0; j < nc; ++j) {
            if (static_cast<int>(cols[j].size()) != nr)
                throw std::domain_error("ragged column list");
            for (int i = 0; i < nr; ++i) m(i, j) = cols[j][i];
        }
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    RatFunc& operator()(int i, int j) { return e_[size_t(i) * cols_ + j]; }
    const RatFunc& operator()(int i, int j) const { return e_[size_t(i) * cols_ + j]; }

    QVector apply(const QVector& x) const {
        if (static_cast<int>(x.size()) != cols_)
            throw std::domain_error("matrix-vector dimension mismatch");
        QVector y(rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j)
                if (!(*this)(i, j).is_zero() && !x[j].is_zero()) y[i] += (*this)(i, j) * x[j];
        return y;
    }

private:
    int rows_, cols_;
    std::vector<RatFunc> e_;
};

// Row-reduced form of a matrix together with the row transform that produced
// it (E*M = R), so the same factorization serves repeated solves.
class RowReduction {
public:
    explicit RowReduction(const QMatrix& m) : r_(m), t_(QMatrix::identity(m.rows())) {
        int row = 0;
        for (int col = 0; col < r_.cols() && row < r_.rows(); ++col) {
            // first nonzero entry in column order
            int piv = -1;
            for (int i = row; i < r_.rows(); ++i)
                if (!r_(i, col).is_zero()) { piv = i; break; }
            if (piv < 0) continue;
            swap_rows(row, piv);
            RatFunc inv = RatFunc(1) / r_(row, col);
            scale_row(row, inv);
            for (int i = 0; i < r_.rows(); ++i) {
                if (i == row || r_(i, col).is_zero()) continue;
                RatFunc f = r_(i, col);
                axpy_row(i, row, -f);
            }
            pivots_.push_back(col);
            ++row;
        }
    }

    int rank() const { return static_cast<int>(pivots_.size()); }
    const std::vector<int>& pivot_cols() const { return pivots_; }
    const QMatrix& reduced() const { return r_; }

    // solve M x = b; returns nullopt when inconsistent
    std::optional<QVector> solve(const QVector& b) const {
        if (static_cast<int>(b.size()) != r_.rows())
            throw std::domain_error("solve: dimension mismatch");
        QVector y = t_.apply(b);
        for (int i = rank(); i < r_.rows(); ++i)
            if (!y[i].is_zero()) return std::nullopt;
        QVector x(r_.cols());
        for (int k = 0; k < rank(); ++k) {
            // free columns contribute 0; pivot entry is 1
            RatFunc v = y[k];
            for (int j = pivots_[k] + 1; j < r_.cols(); ++j)
                if (!r_(k, j).is_zero() && !x[j].is_zero()) v -= r_(k, j) * x[j];
            x[pivots_[k]] = v;
        }
        return x;
    }

    std::vector<QVector> kernel_basis() const {
        std::vector<QVector> basis;
        std::vector<bool> is_pivot(r_.cols(), false);
        for (int c : pivots_) is_pivot[c] = true;
        for (int free = 0; free < r_.cols(); ++free) {
            if (is_pivot[free]) continue;
            QVector v(r_.cols());
            v[free] = RatFunc(1);
            for (int k = 0; k < rank(); ++k)
                v[pivots_[k]] = -r_(k, free);
            basis.push_back(std::move(v));
        }
        return basis;
    }

private:
    void swap_rows(int a, int b) {
        if (a == b) return;
        for (int j = 0; j < r_.cols(); ++j) std::swap(r_(a, j), r_(b, j));
        for (int j = 0; j < t_.cols(); ++j) std::swap(t_(a, j), t_(b, j));
    }
    void scale_row(int i, const RatFunc& f) {
        for (int j = 0; j < r_.cols(); ++j)
            if (!r_(i, j).is_zero()) r_(i, j) *= f;
        for (int j = 0; j < t_.cols(); ++j)
            if (!t_(i, j).is_zero()) t_(i, j) *= f;
    }
    void axpy_row(int dst, int src, const RatFunc& f) {
        for (int j = 0; j < r_.cols(); ++j)
            if (!r_(src, j).is_zero()) r_(dst, j) += f * r_(src, j);
        for (int j = 0; j < t_.cols(); ++j)
            if (!t_(src, j).is_zero()) t_(dst, j) += f * t_(src, j);
    }

    QMatrix r_;  // reduced matrix
    QMatrix t_;  // accumulated row transform
    std::vector<int> pivots_;
};

inline std::optional<QVector> solve(const QMatrix& m, const QVector& b) {
    return RowReduction(m).solve(b);
}
inline int rank(const QMatrix& m) { return RowReduction(m).rank(); }
inline std::vector<QVector> kernel_basis(const QMatrix& m) {
    return RowReduction(m).kernel_basis();
}

}  // namespace qcanon
