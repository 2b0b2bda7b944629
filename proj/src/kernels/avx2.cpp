// Compiled with -mavx2; only reached through the dispatcher after a CPUID check.
#include "scaffold/kernels.hpp"

#include <immintrin.h>

namespace scaffold::kernels::avx2 {

namespace {

// Shoup multiplication: for b < p < 2^31 and c < p with c_shoup = floor(c * 2^32 / p),
// c*b - floor(c_shoup*b / 2^32)*p lies in [0, 2p).
inline __m256i mulmod_shoup(__m256i b, __m256i c, __m256i c_shoup, __m256i p) {
    __m256i even = _mm256_mul_epu32(b, c_shoup);
    __m256i odd = _mm256_mul_epu32(_mm256_srli_epi64(b, 32), c_shoup);
    __m256i q = _mm256_blend_epi32(_mm256_srli_epi64(even, 32), odd, 0b10101010);
    __m256i r = _mm256_sub_epi32(_mm256_mullo_epi32(c, b), _mm256_mullo_epi32(q, p));
    return _mm256_min_epu32(r, _mm256_sub_epi32(r, p));
}

inline std::uint32_t shoup_const(std::uint32_t c, std::uint32_t p) {
    return static_cast<std::uint32_t>((static_cast<std::uint64_t>(c) << 32) / p);
}

}  // namespace

void axpy_mod(std::uint32_t* dst, const std::uint32_t* src, std::size_t n, std::uint32_t c, std::uint32_t p) {
    const __m256i vc = _mm256_set1_epi32(static_cast<int>(c));
    const __m256i vcs = _mm256_set1_epi32(static_cast<int>(shoup_const(c, p)));
    const __m256i vp = _mm256_set1_epi32(static_cast<int>(p));
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
        __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
        __m256i s = _mm256_add_epi32(a, mulmod_shoup(b, vc, vcs, vp));
        s = _mm256_min_epu32(s, _mm256_sub_epi32(s, vp));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), s);
    }
    for (; i < n; ++i)
        dst[i] = static_cast<std::uint32_t>((dst[i] + static_cast<std::uint64_t>(c) * src[i]) % p);
}

void scale_mod(std::uint32_t* dst, std::size_t n, std::uint32_t c, std::uint32_t p) {
    const __m256i vc = _mm256_set1_epi32(static_cast<int>(c));
    const __m256i vcs = _mm256_set1_epi32(static_cast<int>(shoup_const(c, p)));
    const __m256i vp = _mm256_set1_epi32(static_cast<int>(p));
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), mulmod_shoup(b, vc, vcs, vp));
    }
    for (; i < n; ++i) dst[i] = static_cast<std::uint32_t>(static_cast<std::uint64_t>(c) * dst[i] % p);
}

namespace {

// Bit i of the result is set iff point (base + i) <= query, for 8 consecutive points.
inline unsigned block_leq(const PointsSoA& pts, const __m256i* q, std::size_t base) {
    __m256i acc = _mm256_set1_epi32(-1);
    for (std::size_t k = 0; k < pts.dim; ++k) {
        __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(pts.coord(k) + base));
        acc = _mm256_and_si256(acc, _mm256_cmpeq_epi32(_mm256_max_epu32(v, q[k]), q[k]));
    }
    return static_cast<unsigned>(_mm256_movemask_ps(_mm256_castsi256_ps(acc)));
}

constexpr std::size_t kMaxDim = 64;

}  // namespace

void leq_mask(const PointsSoA& pts, const std::uint32_t* query, std::uint8_t* mask) {
    if (pts.dim > kMaxDim) return scalar::leq_mask(pts, query, mask);
    __m256i q[kMaxDim];
    for (std::size_t k = 0; k < pts.dim; ++k) q[k] = _mm256_set1_epi32(static_cast<int>(query[k]));
    std::size_t i = 0;
    for (; i + 8 <= pts.count; i += 8) {
        unsigned bits = block_leq(pts, q, i);
        for (unsigned j = 0; j < 8; ++j) mask[i + j] = static_cast<std::uint8_t>((bits >> j) & 1u);
    }
    for (; i < pts.count; ++i) {
        bool le = true;
        for (std::size_t k = 0; k < pts.dim && le; ++k) le = pts.coord(k)[i] <= query[k];
        mask[i] = le ? 1 : 0;
    }
}

bool any_leq(const PointsSoA& pts, const std::uint32_t* query) {
    if (pts.dim > kMaxDim) return scalar::any_leq(pts, query);
    __m256i q[kMaxDim];
    for (std::size_t k = 0; k < pts.dim; ++k) q[k] = _mm256_set1_epi32(static_cast<int>(query[k]));
    std::size_t i = 0;
    for (; i + 8 <= pts.count; i += 8)
        if (block_leq(pts, q, i)) return true;
    for (; i < pts.count; ++i) {
        bool le = true;
        for (std::size_t k = 0; k < pts.dim && le; ++k) le = pts.coord(k)[i] <= query[k];
        if (le) return true;
    }
    return false;
}

}  // namespace scaffold::kernels::avx2
