#include <doctest.h>

#include <random>
#include <vector>

#include "scaffold/field.hpp"
#include "scaffold/kernels.hpp"

using namespace scaffold;
namespace k = scaffold::kernels;

TEST_SUITE("kernels") {

TEST_CASE("axpy and scale agree across backends") {
    if (!k::backend_available(k::Backend::Avx2)) return;
    std::mt19937_64 rng(7);
    for (std::uint32_t p : {2u, 3u, 5u, 65521u, Field::kMersenne31}) {
        std::uniform_int_distribution<std::uint32_t> val(0, p - 1);
        for (std::size_t n : {0u, 1u, 7u, 8u, 9u, 31u, 64u, 257u}) {
            std::vector<std::uint32_t> a(n), b(n);
            for (auto& x : a) x = val(rng);
            for (auto& x : b) x = val(rng);
            const std::uint32_t c = val(rng);
            auto s = a, v = a;
            k::scalar::axpy_mod(s.data(), b.data(), n, c, p);
            k::avx2::axpy_mod(v.data(), b.data(), n, c, p);
            CHECK(s == v);
            for (std::size_t i = 0; i < n; ++i)
                CHECK(s[i] == (a[i] + std::uint64_t{c} * b[i]) % p);
            k::scalar::scale_mod(s.data(), n, c, p);
            k::avx2::scale_mod(v.data(), n, c, p);
            CHECK(s == v);
        }
    }
}

TEST_CASE("domination masks agree across backends") {
    if (!k::backend_available(k::Backend::Avx2)) return;
    std::mt19937_64 rng(11);
    for (std::size_t d : {1u, 2u, 3u, 4u, 6u}) {
        for (std::size_t n : {1u, 5u, 8u, 13u, 100u}) {
            // Values near 2^32 exercise the unsigned comparison path.
            std::uniform_int_distribution<std::uint32_t> small(0, 4);
            const bool high = (n % 2) == 1;
            std::vector<std::uint32_t> data(d * n);
            for (auto& x : data) x = high ? 0xFFFFFFFFu - small(rng) : small(rng);
            k::PointsSoA pts{data, n, n, d};
            for (int trial = 0; trial < 20; ++trial) {
                std::vector<std::uint32_t> q(d);
                for (auto& x : q) x = high ? 0xFFFFFFFFu - small(rng) : small(rng);
                std::vector<std::uint8_t> m1(n), m2(n);
                k::scalar::leq_mask(pts, q.data(), m1.data());
                k::avx2::leq_mask(pts, q.data(), m2.data());
                CHECK(m1 == m2);
                bool any = false;
                for (std::size_t i = 0; i < n; ++i) {
                    bool le = true;
                    for (std::size_t c = 0; c < d; ++c) le = le && data[c * n + i] <= q[c];
                    CHECK(bool(m1[i]) == le);
                    any = any || le;
                }
                CHECK(k::scalar::any_leq(pts, q.data()) == any);
                CHECK(k::avx2::any_leq(pts, q.data()) == any);
            }
        }
    }
}

TEST_CASE("backend switching") {
    const auto before = k::active_backend();
    CHECK(k::set_backend(k::Backend::Scalar));
    CHECK(k::active_backend() == k::Backend::Scalar);
    CHECK(k::backend_name(k::Backend::Scalar) == "scalar");
    k::set_backend(before);
}

}
