#include "rrlab/linalg.hpp"

#include <numeric>
#include <stdexcept>

namespace rrlab {

bool RowSpan::is_zero(const Vec& v) {
    for (auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

Vec RowSpan::reduce(Vec v) const {
    if (v.size() != width_) throw std::invalid_argument("row width mismatch");
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const Scalar& c = v[pivots_[r]];
        if (c.is_zero()) continue;
        Scalar factor = c; // pivot entries are 1
        for (std::size_t j = pivots_[r]; j < width_; ++j) {
            if (!rows_[r][j].is_zero()) v[j] -= factor * rows_[r][j];
        }
    }
    return v;
}

bool RowSpan::add(Vec v) {
    v = reduce(std::move(v));
    std::size_t p = width_;
    for (std::size_t j = 0; j < width_; ++j) {
        if (!v[j].is_zero()) { p = j; break; }
    }
    if (p == width_) return false;
    Scalar inv = v[p].inverse();
    for (auto& x : v) x *= inv;
    // back-reduce existing rows
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const Scalar& c = rows_[r][p];
        if (c.is_zero()) continue;
        Scalar factor = c;
        for (std::size_t j = p; j < width_; ++j)
            if (!v[j].is_zero()) rows_[r][j] -= factor * v[j];
    }
    std::size_t pos = 0;
    while (pos < pivots_.size() && pivots_[pos] < p) ++pos;
    rows_.insert(rows_.begin() + pos, std::move(v));
    pivots_.insert(pivots_.begin() + pos, p);
    return true;
}

std::vector<Vec> kernel_basis(const std::vector<Vec>& columns, std::size_t height, const Field& f) {
    const std::size_t n = columns.size();
    // Row-reduce the height x n matrix.
    std::vector<Vec> m(height, Vec(n, Scalar::zero(f)));
    for (std::size_t j = 0; j < n; ++j) {
        if (columns[j].size() != height) throw std::invalid_argument("column height mismatch");
        for (std::size_t i = 0; i < height; ++i) m[i][j] = columns[j][i];
    }
    std::vector<std::size_t> pivot_col;
    std::size_t row = 0;
    for (std::size_t col = 0; col < n && row < height; ++col) {
        std::size_t sel = height;
        for (std::size_t i = row; i < height; ++i)
            if (!m[i][col].is_zero()) { sel = i; break; }
        if (sel == height) continue;
        std::swap(m[row], m[sel]);
        Scalar inv = m[row][col].inverse();
        for (auto& x : m[row]) x *= inv;
        for (std::size_t i = 0; i < height; ++i) {
            if (i == row || m[i][col].is_zero()) continue;
            Scalar factor = m[i][col];
            for (std::size_t j = col; j < n; ++j)
                if (!m[row][j].is_zero()) m[i][j] -= factor * m[row][j];
        }
        pivot_col.push_back(col);
        ++row;
    }
    std::vector<bool> is_pivot(n, false);
    for (auto c : pivot_col) is_pivot[c] = true;
    std::vector<Vec> basis;
    for (std::size_t j = 0; j < n; ++j) {
        if (is_pivot[j]) continue;
        Vec k(n, Scalar::zero(f));
        k[j] = Scalar::one(f);
        for (std::size_t r = 0; r < pivot_col.size(); ++r)
            k[pivot_col[r]] = -m[r][j];
        basis.push_back(std::move(k));
    }
    return basis;
}

std::optional<Vec> solve_columns(const std::vector<Vec>& columns, const Vec& target, std::size_t height,
                                 const Field& f, const std::vector<std::size_t>* prefer) {
    const std::size_t n = columns.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    if (prefer) order = *prefer;

    std::vector<Vec> m(height, Vec(n + 1, Scalar::zero(f)));
    for (std::size_t jj = 0; jj < n; ++jj) {
        const Vec& col = columns[order[jj]];
        if (col.size() != height) throw std::invalid_argument("column height mismatch");
        for (std::size_t i = 0; i < height; ++i) m[i][jj] = col[i];
    }
    for (std::size_t i = 0; i < height; ++i) m[i][n] = target[i];

    std::vector<std::size_t> pivot_col;
    std::size_t row = 0;
    for (std::size_t col = 0; col < n && row < height; ++col) {
        std::size_t sel = height;
        for (std::size_t i = row; i < height; ++i)
            if (!m[i][col].is_zero()) { sel = i; break; }
        if (sel == height) continue;
        std::swap(m[row], m[sel]);
        Scalar inv = m[row][col].inverse();
        for (auto& x : m[row]) x *= inv;
        for (std::size_t i = 0; i < height; ++i) {
            if (i == row || m[i][col].is_zero()) continue;
            Scalar factor = m[i][col];
            for (std::size_t j = col; j <= n; ++j)
                if (!m[row][j].is_zero()) m[i][j] -= factor * m[row][j];
        }
        pivot_col.push_back(col);
        ++row;
    }
    // inconsistency: a nonzero target entry in a zero row
    for (std::size_t i = row; i < height; ++i)
        if (!m[i][n].is_zero()) return std::nullopt;

    Vec x(n, Scalar::zero(f));
    for (std::size_t r = 0; r < pivot_col.size(); ++r)
        x[order[pivot_col[r]]] = m[r][n];
    return x;
}

} // namespace rrlab
