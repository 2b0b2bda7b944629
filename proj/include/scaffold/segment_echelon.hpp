#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "scaffold/field.hpp"
#include "scaffold/matrix.hpp"

namespace scaffold {

/// A row whose nonzeros lie in the column window [start, start + values.size()).
struct SegmentRow {
    std::size_t start = 0;
    std::vector<Scalar> values;

    std::size_t end() const noexcept { return start + values.size(); }
    Scalar at(std::size_t col) const noexcept {
        return col >= start && col < end() ? values[col - start] : 0;
    }
};

/// Incremental row echelon form for large, mostly banded systems (limit and colimit
/// constraint matrices). Rows are kept as column windows, so elimination cost follows
/// the bandwidth rather than the full column count. Pivot rows are normalized to a
/// leading 1 and indexed by their leading column.
class SegmentEchelon {
public:
    SegmentEchelon(std::size_t cols, Field field);

    /// Reduces `row` against the current pivots; installs it and returns true if it
    /// is independent of the rows added so far.
    bool add_row(SegmentRow row);

    std::size_t cols() const noexcept { return cols_; }
    std::size_t rank() const noexcept { return rank_; }
    const Field& field() const noexcept { return field_; }
    bool is_pivot(std::size_t col) const { return pivots_[col].has_value(); }
    const SegmentRow* pivot_row(std::size_t col) const {
        return pivots_[col] ? &*pivots_[col] : nullptr;
    }

    /// Null space basis (cols x (cols - rank)) by back substitution, one column per
    /// free variable in increasing order.
    Matrix kernel_basis() const;

    /// Projection onto the quotient by the row span: returns a (cols - rank) x cols
    /// matrix whose column j is the class of the j-th standard vector, expressed in the
    /// basis given by the standard vectors at free (non-pivot) columns.
    Matrix quotient_projection() const;

    std::vector<std::size_t> free_columns() const;

private:
    std::size_t cols_;
    Field field_;
    std::size_t rank_ = 0;
    std::vector<std::optional<SegmentRow>> pivots_;
};

}  // namespace scaffold
