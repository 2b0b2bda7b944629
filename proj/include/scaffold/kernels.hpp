#pragma once

// Data-parallel inner loops. Each kernel has a scalar reference version and an
// AVX2 version; the active backend is chosen once at startup from CPUID and can
// be overridden (tests pin both and compare).

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace scaffold::kernels {

enum class Backend { Scalar, Avx2 };

/// dst[i] = (dst[i] + c * src[i]) mod p.  Requires p < 2^31, all inputs reduced.
void axpy_mod(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src, std::uint32_t c,
              std::uint32_t p);

/// dst[i] = c * dst[i] mod p.
void scale_mod(std::span<std::uint32_t> dst, std::uint32_t c, std::uint32_t p);

/// Structure-of-arrays point set: coord(k)[i] is coordinate k of point i.
struct PointsSoA {
    std::span<const std::uint32_t> data;  // d * stride entries
    std::size_t count = 0;
    std::size_t stride = 0;
    std::size_t dim = 0;
    const std::uint32_t* coord(std::size_t k) const { return data.data() + k * stride; }
};

/// mask[i] = 1 iff point i <= query in the product order, else 0.
void leq_mask(const PointsSoA& pts, std::span<const std::uint32_t> query, std::span<std::uint8_t> mask);

/// True iff some point i satisfies point_i <= query.
bool any_leq(const PointsSoA& pts, std::span<const std::uint32_t> query);

Backend active_backend();
bool backend_available(Backend b);
/// Force a backend; returns false (and leaves the current one) if unsupported.
bool set_backend(Backend b);
std::string_view backend_name(Backend b);

namespace scalar {
void axpy_mod(std::uint32_t* dst, const std::uint32_t* src, std::size_t n, std::uint32_t c, std::uint32_t p);
void scale_mod(std::uint32_t* dst, std::size_t n, std::uint32_t c, std::uint32_t p);
void leq_mask(const PointsSoA& pts, const std::uint32_t* query, std::uint8_t* mask);
bool any_leq(const PointsSoA& pts, const std::uint32_t* query);
}  // namespace scalar

namespace avx2 {
void axpy_mod(std::uint32_t* dst, const std::uint32_t* src, std::size_t n, std::uint32_t c, std::uint32_t p);
void scale_mod(std::uint32_t* dst, std::size_t n, std::uint32_t c, std::uint32_t p);
void leq_mask(const PointsSoA& pts, const std::uint32_t* query, std::uint8_t* mask);
bool any_leq(const PointsSoA& pts, const std::uint32_t* query);
}  // namespace avx2

}  // namespace scaffold::kernels
