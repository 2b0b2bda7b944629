#include "scaffold/segment_echelon.hpp"

#include <algorithm>
#include <stdexcept>

#include "scaffold/kernels.hpp"

namespace scaffold {

SegmentEchelon::SegmentEchelon(std::size_t cols, Field field) : cols_(cols), field_(field), pivots_(cols) {}

namespace {

void trim(SegmentRow& row) {
    std::size_t lead = 0;
    while (lead < row.values.size() && row.values[lead] == 0) ++lead;
    if (lead == row.values.size()) {
        row.values.clear();
        return;
    }
    std::size_t tail = row.values.size();
    while (row.values[tail - 1] == 0) --tail;
    row.values.erase(row.values.begin() + static_cast<std::ptrdiff_t>(tail), row.values.end());
    row.values.erase(row.values.begin(), row.values.begin() + static_cast<std::ptrdiff_t>(lead));
    row.start += lead;
}

}  // namespace

bool SegmentEchelon::add_row(SegmentRow row) {
    if (row.end() > cols_) throw std::out_of_range("SegmentEchelon::add_row: row exceeds column count");
    const std::uint32_t p = field_.modulus();
    trim(row);
    while (!row.values.empty()) {
        const std::size_t lead = row.start;
        const auto& piv = pivots_[lead];
        if (!piv) {
            kernels::scale_mod(row.values, field_.inv(row.values[0]), p);
            pivots_[lead] = std::move(row);
            ++rank_;
            return true;
        }
        // The pivot row starts at `lead` as well; widen the row to cover it.
        if (piv->end() > row.end()) row.values.resize(piv->end() - row.start, 0);
        kernels::axpy_mod(std::span<Scalar>(row.values.data(), piv->values.size()), piv->values,
                          field_.neg(row.values[0]), p);
        trim(row);
    }
    return false;
}

std::vector<std::size_t> SegmentEchelon::free_columns() const {
    std::vector<std::size_t> out;
    for (std::size_t c = 0; c < cols_; ++c)
        if (!pivots_[c]) out.push_back(c);
    return out;
}

Matrix SegmentEchelon::kernel_basis() const {
    const auto free = free_columns();
    Matrix k(cols_, free.size());
    std::vector<Scalar> x(cols_);
    for (std::size_t j = 0; j < free.size(); ++j) {
        std::fill(x.begin(), x.end(), 0);
        x[free[j]] = 1;
        // Pivot variables left of the free column are determined right to left.
        for (std::size_t c = free[j]; c-- > 0;) {
            const auto& row = pivots_[c];
            if (!row) continue;
            std::uint64_t acc = 0;
            const std::size_t stop = std::min(row->end(), free[j] + 1);
            for (std::size_t t = c + 1; t < stop; ++t)
                if (x[t]) acc = (acc + static_cast<std::uint64_t>(row->values[t - c]) * x[t]) % field_.modulus();
            x[c] = field_.neg(static_cast<Scalar>(acc));
        }
        for (std::size_t c = 0; c <= free[j]; ++c) k(c, j) = x[c];
    }
    return k;
}

Matrix SegmentEchelon::quotient_projection() const {
    const auto free = free_columns();
    std::vector<std::size_t> free_pos(cols_, 0);
    for (std::size_t j = 0; j < free.size(); ++j) free_pos[free[j]] = j;
    // proj[c] is the class of e_c in the free-column basis; fill right to left since
    // a pivot row expresses e_c through columns to its right.
    Matrix proj(free.size(), cols_);
    std::vector<Scalar> col(free.size());
    const std::uint32_t p = field_.modulus();
    for (std::size_t c = cols_; c-- > 0;) {
        if (!pivots_[c]) {
            proj(free_pos[c], c) = 1;
            continue;
        }
        std::fill(col.begin(), col.end(), 0);
        const auto& row = *pivots_[c];
        for (std::size_t t = c + 1; t < row.end(); ++t) {
            const Scalar coef = row.values[t - c];
            if (!coef) continue;
            const Scalar neg = field_.neg(coef);
            for (std::size_t i = 0; i < free.size(); ++i)
                if (proj(i, t)) col[i] = static_cast<Scalar>((col[i] + static_cast<std::uint64_t>(neg) * proj(i, t)) % p);
        }
        for (std::size_t i = 0; i < free.size(); ++i) proj(i, c) = col[i];
    }
    return proj;
}

}  // namespace scaffold
