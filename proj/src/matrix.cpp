#include "scaffold/matrix.hpp"

#include <sstream>
#include <stdexcept>

#include "scaffold/kernels.hpp"

namespace scaffold {

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

std::vector<Scalar> Matrix::column(std::size_t c) const {
    std::vector<Scalar> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
    return out;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

Matrix Matrix::submatrix(std::span<const std::size_t> row_idx, std::span<const std::size_t> col_idx) const {
    Matrix s(row_idx.size(), col_idx.size());
    for (std::size_t i = 0; i < row_idx.size(); ++i)
        for (std::size_t j = 0; j < col_idx.size(); ++j) s(i, j) = (*this)(row_idx[i], col_idx[j]);
    return s;
}

Matrix Matrix::columns(std::span<const std::size_t> col_idx) const {
    Matrix s(rows_, col_idx.size());
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < col_idx.size(); ++j) s(i, j) = (*this)(i, col_idx[j]);
    return s;
}

Matrix Matrix::row_block(std::size_t first, std::size_t count) const {
    Matrix s(count, cols_);
    for (std::size_t i = 0; i < count; ++i)
        for (std::size_t j = 0; j < cols_; ++j) s(i, j) = (*this)(first + i, j);
    return s;
}

bool Matrix::is_zero() const {
    for (Scalar v : data_)
        if (v) return false;
    return true;
}

Matrix multiply(const Matrix& a, const Matrix& b, const Field& f) {
    if (a.cols() != b.rows()) throw std::invalid_argument("multiply: inner dimensions differ");
    Matrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k)
            kernels::axpy_mod(c.row(i), b.row(k), a(i, k), f.modulus());
    return c;
}

Matrix hconcat(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("hconcat: row counts differ");
    Matrix c(a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) c(i, a.cols() + j) = b(i, j);
    }
    return c;
}

namespace {

void swap_rows(Matrix& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    auto ra = m.row(a), rb = m.row(b);
    for (std::size_t j = 0; j < ra.size(); ++j) std::swap(ra[j], rb[j]);
}

}  // namespace

EchelonForm row_echelon(const Matrix& a, const Field& f, bool reduced) {
    const std::uint32_t p = f.modulus();
    EchelonForm out{a, Matrix::identity(a.rows()), {}};
    Matrix& e = out.echelon;
    Matrix& t = out.transform;
    std::size_t r = 0;
    for (std::size_t c = 0; c < e.cols() && r < e.rows(); ++c) {
        std::size_t piv = r;
        while (piv < e.rows() && e(piv, c) == 0) ++piv;
        if (piv == e.rows()) continue;
        swap_rows(e, r, piv);
        swap_rows(t, r, piv);
        Scalar inv = f.inv(e(r, c));
        kernels::scale_mod(e.row(r), inv, p);
        kernels::scale_mod(t.row(r), inv, p);
        for (std::size_t i = reduced ? 0 : r + 1; i < e.rows(); ++i) {
            if (i == r || e(i, c) == 0) continue;
            Scalar factor = f.neg(e(i, c));
            kernels::axpy_mod(e.row(i), e.row(r), factor, p);
            kernels::axpy_mod(t.row(i), t.row(r), factor, p);
        }
        out.pivots.push_back(c);
        ++r;
    }
    return out;
}

std::size_t rank(const Matrix& a, const Field& f) {
    // Transform is not needed; eliminate on a copy.
    Matrix e = a;
    const std::uint32_t p = f.modulus();
    std::size_t r = 0;
    for (std::size_t c = 0; c < e.cols() && r < e.rows(); ++c) {
        std::size_t piv = r;
        while (piv < e.rows() && e(piv, c) == 0) ++piv;
        if (piv == e.rows()) continue;
        swap_rows(e, r, piv);
        Scalar inv = f.inv(e(r, c));
        kernels::scale_mod(e.row(r), inv, p);
        for (std::size_t i = r + 1; i < e.rows(); ++i)
            if (e(i, c)) kernels::axpy_mod(e.row(i), e.row(r), f.neg(e(i, c)), p);
        ++r;
    }
    return r;
}

Matrix echelon_span(const Matrix& a, const Field& f, std::vector<std::size_t>* pivots) {
    // Rows of the RREF of a^T span the column space of a.
    EchelonForm ef = row_echelon(a.transpose(), f, /*reduced=*/true);
    if (pivots) *pivots = ef.pivots;
    return ef.echelon.row_block(0, ef.pivots.size());
}

Matrix kernel_basis(const Matrix& a, const Field& f) {
    const std::size_t n = a.cols();
    EchelonForm ef = row_echelon(a, f, /*reduced=*/true);
    std::vector<bool> is_pivot(n, false);
    for (auto c : ef.pivots) is_pivot[c] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < n; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    Matrix k(n, free_cols.size());
    for (std::size_t j = 0; j < free_cols.size(); ++j) {
        k(free_cols[j], j) = 1;
        for (std::size_t r = 0; r < ef.pivots.size(); ++r) k(ef.pivots[r], j) = f.neg(ef.echelon(r, free_cols[j]));
    }
    if (k.cols() == 0) return k;
    // Re-echelonize so that leading indices are strictly increasing.
    return echelon_span(k, f).transpose();
}

std::optional<std::vector<Scalar>> solve_in_span(const Matrix& b, std::span<const Scalar> v, const Field& f) {
    if (v.size() != b.rows()) throw std::invalid_argument("solve_in_span: vector length mismatch");
    Matrix aug(b.rows(), b.cols() + 1);
    for (std::size_t i = 0; i < b.rows(); ++i) {
        for (std::size_t j = 0; j < b.cols(); ++j) aug(i, j) = b(i, j);
        aug(i, b.cols()) = v[i];
    }
    EchelonForm ef = row_echelon(aug, f, /*reduced=*/true);
    if (!ef.pivots.empty() && ef.pivots.back() == b.cols()) return std::nullopt;
    std::vector<Scalar> x(b.cols(), 0);
    for (std::size_t r = 0; r < ef.pivots.size(); ++r) x[ef.pivots[r]] = ef.echelon(r, b.cols());
    return x;
}

Matrix inverse(const Matrix& a, const Field& f) {
    if (a.rows() != a.cols()) throw std::invalid_argument("inverse: matrix is not square");
    EchelonForm ef = row_echelon(a, f, /*reduced=*/true);
    if (ef.pivots.size() != a.rows()) throw std::domain_error("inverse: matrix is singular");
    return ef.transform;
}

std::string to_string(const Matrix& m) {
    std::ostringstream os;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m(i, j);
        os << '\n';
    }
    return os.str();
}

}  // namespace scaffold
