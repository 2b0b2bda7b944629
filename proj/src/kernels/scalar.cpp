#include "scaffold/kernels.hpp"

namespace scaffold::kernels::scalar {

void axpy_mod(std::uint32_t* dst, const std::uint32_t* src, std::size_t n, std::uint32_t c, std::uint32_t p) {
    for (std::size_t i = 0; i < n; ++i)
        dst[i] = static_cast<std::uint32_t>((dst[i] + static_cast<std::uint64_t>(c) * src[i]) % p);
}

void scale_mod(std::uint32_t* dst, std::size_t n, std::uint32_t c, std::uint32_t p) {
    for (std::size_t i = 0; i < n; ++i)
        dst[i] = static_cast<std::uint32_t>(static_cast<std::uint64_t>(c) * dst[i] % p);
}

void leq_mask(const PointsSoA& pts, const std::uint32_t* query, std::uint8_t* mask) {
    for (std::size_t i = 0; i < pts.count; ++i) {
        bool le = true;
        for (std::size_t k = 0; k < pts.dim && le; ++k) le = pts.coord(k)[i] <= query[k];
        mask[i] = le ? 1 : 0;
    }
}

bool any_leq(const PointsSoA& pts, const std::uint32_t* query) {
    for (std::size_t i = 0; i < pts.count; ++i) {
        bool le = true;
        for (std::size_t k = 0; k < pts.dim && le; ++k) le = pts.coord(k)[i] <= query[k];
        if (le) return true;
    }
    return false;
}

}  // namespace scaffold::kernels::scalar
