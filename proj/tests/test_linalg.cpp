#include <doctest.h>

#include <random>
#include <vector>

#include "scaffold/kernels.hpp"
#include "scaffold/matrix.hpp"
#include "scaffold/segment_echelon.hpp"

using namespace scaffold;

namespace {

Matrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, const Field& f, double density) {
    std::bernoulli_distribution nz(density);
    std::uniform_int_distribution<std::uint32_t> val(1, f.modulus() - 1);
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            if (nz(rng)) m(i, j) = val(rng);
    return m;
}

// Textbook elimination on 64-bit integers, kept independent of the library.
std::size_t naive_rank(Matrix a, std::uint64_t p) {
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::size_t piv = r;
        while (piv < a.rows() && a(piv, c) == 0) ++piv;
        if (piv == a.rows()) continue;
        for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(r, j), a(piv, j));
        std::uint64_t inv = 1, base = a(r, c), e = p - 2;
        while (e) {
            if (e & 1) inv = inv * base % p;
            base = base * base % p;
            e >>= 1;
        }
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == r || a(i, c) == 0) continue;
            const std::uint64_t factor = a(i, c) * inv % p;
            for (std::size_t j = 0; j < a.cols(); ++j)
                a(i, j) = static_cast<Scalar>((a(i, j) + (p - factor) * a(r, j)) % p);
        }
        ++r;
    }
    return r;
}

template <class Fn>
void on_each_backend(Fn&& fn) {
    const auto before = kernels::active_backend();
    for (auto b : {kernels::Backend::Scalar, kernels::Backend::Avx2}) {
        if (!kernels::set_backend(b)) continue;
        fn();
    }
    kernels::set_backend(before);
}

}  // namespace

TEST_SUITE("linalg") {

TEST_CASE("rank and kernel against a naive eliminator") {
    on_each_backend([] {
        std::mt19937_64 rng(3);
        for (std::uint32_t p : {2u, 5u, Field::kMersenne31}) {
            const Field f(p);
            for (int trial = 0; trial < 60; ++trial) {
                const std::size_t r = rng() % 9, c = rng() % 9;
                const Matrix a = random_matrix(rng, r, c, f, 0.4);
                const std::size_t rk = rank(a, f);
                REQUIRE(rk == naive_rank(a, p));
                const Matrix k = kernel_basis(a, f);
                CHECK(k.cols() == c - rk);
                CHECK(multiply(a, k, f).is_zero());
                CHECK(naive_rank(k, p) == k.cols());
                // Echelon shape of the kernel columns.
                std::size_t last = 0;
                for (std::size_t j = 0; j < k.cols(); ++j) {
                    std::size_t lead = 0;
                    while (k(lead, j) == 0) ++lead;
                    CHECK(k(lead, j) == 1);
                    if (j) CHECK(lead > last);
                    last = lead;
                }
            }
        }
    });
}

TEST_CASE("echelon form transform reproduces the echelon matrix") {
    std::mt19937_64 rng(5);
    const Field f(7);
    for (int trial = 0; trial < 40; ++trial) {
        const Matrix a = random_matrix(rng, 1 + rng() % 6, 1 + rng() % 6, f, 0.5);
        for (bool reduced : {false, true}) {
            const EchelonForm ef = row_echelon(a, f, reduced);
            CHECK(multiply(ef.transform, a, f) == ef.echelon);
            CHECK(naive_rank(ef.transform, 7) == a.rows());
            CHECK(ef.pivots.size() == naive_rank(a, 7));
        }
    }
}

TEST_CASE("inverse, span and solve") {
    std::mt19937_64 rng(9);
    const Field f(Field::kMersenne31);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t n = 1 + rng() % 6;
        const Matrix a = random_matrix(rng, n, n, f, 0.8);
        if (rank(a, f) == n) {
            CHECK(multiply(a, inverse(a, f), f) == Matrix::identity(n));
        } else {
            CHECK_THROWS_AS(inverse(a, f), std::domain_error);
        }
        const Matrix b = random_matrix(rng, n, 1 + rng() % 4, f, 0.6);
        std::vector<std::size_t> pivots;
        const Matrix span = echelon_span(b, f, &pivots);
        CHECK(span.rows() == rank(b, f));
        CHECK(rank(hconcat(b, span.transpose()), f) == span.rows());
        // A combination of the columns is solvable and the witness reproduces it.
        std::vector<Scalar> x(b.cols());
        for (auto& v : x) v = static_cast<Scalar>(rng() % 100);
        std::vector<Scalar> v(n, 0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < b.cols(); ++j) v[i] = f.add(v[i], f.mul(b(i, j), x[j]));
        const auto sol = solve_in_span(b, v, f);
        REQUIRE(sol.has_value());
        for (std::size_t i = 0; i < n; ++i) {
            Scalar acc = 0;
            for (std::size_t j = 0; j < b.cols(); ++j) acc = f.add(acc, f.mul(b(i, j), (*sol)[j]));
            CHECK(acc == v[i]);
        }
    }
    const Matrix e1{[] {
        Matrix m(2, 1);
        m(0, 0) = 1;
        return m;
    }()};
    const std::vector<Scalar> e2{0, 1};
    CHECK_FALSE(solve_in_span(e1, e2, f).has_value());
}

TEST_CASE("segment echelon matches dense elimination") {
    on_each_backend([] {
        std::mt19937_64 rng(13);
        for (std::uint32_t p : {2u, 5u, Field::kMersenne31}) {
            const Field f(p);
            for (int trial = 0; trial < 50; ++trial) {
                const std::size_t cols = 1 + rng() % 40, rows = rng() % 30;
                Matrix dense(rows, cols);
                SegmentEchelon se(cols, f);
                for (std::size_t i = 0; i < rows; ++i) {
                    const std::size_t start = rng() % cols;
                    const std::size_t len = 1 + rng() % std::min<std::size_t>(8, cols - start);
                    SegmentRow row{start, {}};
                    for (std::size_t t = 0; t < len; ++t) {
                        const Scalar v = (rng() % 3 == 0) ? 0 : static_cast<Scalar>(1 + rng() % (p - 1));
                        row.values.push_back(v);
                        dense(i, start + t) = v;
                    }
                    se.add_row(std::move(row));
                }
                REQUIRE(se.rank() == naive_rank(dense, p));
                const Matrix k = se.kernel_basis();
                CHECK(k.cols() == cols - se.rank());
                CHECK(multiply(dense, k, f).is_zero());
                CHECK(rank(k, f) == k.cols());
                // Projection kills the row space and is onto.
                const Matrix proj = se.quotient_projection();
                CHECK(proj.rows() == cols - se.rank());
                CHECK(multiply(proj, dense.transpose(), f).is_zero());
                CHECK(rank(proj, f) == proj.rows());
            }
        }
    });
}

TEST_CASE("segment echelon rejects rows past the column count") {
    SegmentEchelon se(3, Field(5));
    CHECK_THROWS_AS(se.add_row({2, {1, 1}}), std::out_of_range);
    CHECK(se.add_row({0, {1, 2, 3}}));
    CHECK_FALSE(se.add_row({0, {2, 4, 6}}));
}

}
