/**
 * @file linalg.hpp
 * @brief Dense exact linear algebra over a field (Gaussian elimination).
 */
#ifndef RRLAB_LINALG_HPP
#define RRLAB_LINALG_HPP

#include <optional>
#include <vector>

#include "rrlab/scalar.hpp"

namespace rrlab {

using Vec = std::vector<Scalar>;

/// Incremental row-echelon span: add vectors, query membership, reduce to
/// canonical residues. Rows are kept normalized and back-reduced.
class RowSpan {
public:
    RowSpan(std::size_t width, Field f) : width_(width), field_(f) {}

    /// Returns true when v enlarges the span.
    bool add(Vec v);
    bool contains(const Vec& v) const { return is_zero(reduce(v)); }
    Vec reduce(Vec v) const;

    std::size_t dim() const { return rows_.size(); }
    std::size_t width() const { return width_; }
    const std::vector<Vec>& rows() const { return rows_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    static bool is_zero(const Vec& v);

private:
    std::size_t width_;
    Field field_;
    std::vector<Vec> rows_;          // echelon, normalized, back-reduced
    std::vector<std::size_t> pivots_; // pivot column per row, increasing
};

/// Kernel of the map c -> sum c_i * columns[i]; vectors of length columns.size().
std::vector<Vec> kernel_basis(const std::vector<Vec>& columns, std::size_t height, const Field& f);

/// One solution of sum c_i * columns[i] = target, or nullopt. `prefer`
/// optionally permutes the elimination order of columns, which changes which
/// particular solution is returned.
std::optional<Vec> solve_columns(const std::vector<Vec>& columns, const Vec& target, std::size_t height,
                                 const Field& f, const std::vector<std::size_t>* prefer = nullptr);

} // namespace rrlab

#endif
