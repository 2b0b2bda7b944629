#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "scaffold/field.hpp"

namespace scaffold {

/// Dense row-major matrix over a prime field. Entries are stored reduced.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

    static Matrix identity(std::size_t n);
    static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

    Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    Scalar operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<Scalar> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    std::span<const Scalar> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
    std::vector<Scalar> column(std::size_t c) const;

    Matrix transpose() const;
    Matrix submatrix(std::span<const std::size_t> row_idx, std::span<const std::size_t> col_idx) const;
    Matrix columns(std::span<const std::size_t> col_idx) const;
    Matrix row_block(std::size_t first, std::size_t count) const;
    bool is_zero() const;

    bool operator==(const Matrix& o) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

Matrix multiply(const Matrix& a, const Matrix& b, const Field& f);
/// Horizontal concatenation [a | b].
Matrix hconcat(const Matrix& a, const Matrix& b);

struct EchelonForm {
    Matrix echelon;                  // transform * A; pivot rows first, leading entries 1
    Matrix transform;                // invertible, rows x rows
    std::vector<std::size_t> pivots; // strictly increasing pivot columns
};

/// Row echelon form by classical Gaussian elimination. With `reduced`, entries above
/// each pivot are cleared as well (RREF).
EchelonForm row_echelon(const Matrix& a, const Field& f, bool reduced = false);

std::size_t rank(const Matrix& a, const Field& f);

/// Null space basis as columns. Columns are in echelon form: the first nonzero index
/// of each column is strictly increasing, and each column has a 1 there.
Matrix kernel_basis(const Matrix& a, const Field& f);

/// Basis of the column span of `a`, returned as the rows of a matrix in reduced echelon
/// form (leading 1, strictly increasing leading index). `pivots` receives the leading indices.
Matrix echelon_span(const Matrix& a, const Field& f, std::vector<std::size_t>* pivots = nullptr);

/// Coordinates x with b * x = v, or nullopt when v is not in the column span of b.
std::optional<std::vector<Scalar>> solve_in_span(const Matrix& b, std::span<const Scalar> v, const Field& f);

/// Inverse of a square invertible matrix; throws std::domain_error if singular.
Matrix inverse(const Matrix& a, const Field& f);

std::string to_string(const Matrix& m);

}  // namespace scaffold
