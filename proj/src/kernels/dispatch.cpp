#include "scaffold/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <cstring>

namespace scaffold::kernels {

namespace {

bool cpu_has_avx2() {
#if defined(SCAFFOLD_HAVE_AVX2) && (defined(__x86_64__) || defined(__i386__))
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

Backend initial_backend() {
    if (const char* env = std::getenv("SCAFFOLD_KERNELS"); env && std::strcmp(env, "scalar") == 0)
        return Backend::Scalar;
    return cpu_has_avx2() ? Backend::Avx2 : Backend::Scalar;
}

std::atomic<Backend>& current() {
    static std::atomic<Backend> b{initial_backend()};
    return b;
}

}  // namespace

#ifndef SCAFFOLD_HAVE_AVX2
// Never selected without AVX2 support; present so dispatch links.
namespace avx2 {
void axpy_mod(std::uint32_t* dst, const std::uint32_t* src, std::size_t n, std::uint32_t c, std::uint32_t p) {
    scalar::axpy_mod(dst, src, n, c, p);
}
void scale_mod(std::uint32_t* dst, std::size_t n, std::uint32_t c, std::uint32_t p) { scalar::scale_mod(dst, n, c, p); }
void leq_mask(const PointsSoA& pts, const std::uint32_t* query, std::uint8_t* mask) { scalar::leq_mask(pts, query, mask); }
bool any_leq(const PointsSoA& pts, const std::uint32_t* query) { return scalar::any_leq(pts, query); }
}  // namespace avx2
#endif

Backend active_backend() { return current().load(std::memory_order_relaxed); }

bool backend_available(Backend b) { return b == Backend::Scalar || cpu_has_avx2(); }

bool set_backend(Backend b) {
    if (!backend_available(b)) return false;
    current().store(b, std::memory_order_relaxed);
    return true;
}

std::string_view backend_name(Backend b) { return b == Backend::Avx2 ? "avx2" : "scalar"; }

void axpy_mod(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src, std::uint32_t c,
              std::uint32_t p) {
    if (c == 0 || dst.empty()) return;
    if (active_backend() == Backend::Avx2)
        avx2::axpy_mod(dst.data(), src.data(), dst.size(), c, p);
    else
        scalar::axpy_mod(dst.data(), src.data(), dst.size(), c, p);
}

void scale_mod(std::span<std::uint32_t> dst, std::uint32_t c, std::uint32_t p) {
    if (c == 1 || dst.empty()) return;
    if (active_backend() == Backend::Avx2)
        avx2::scale_mod(dst.data(), dst.size(), c, p);
    else
        scalar::scale_mod(dst.data(), dst.size(), c, p);
}

void leq_mask(const PointsSoA& pts, std::span<const std::uint32_t> query, std::span<std::uint8_t> mask) {
    if (active_backend() == Backend::Avx2)
        avx2::leq_mask(pts, query.data(), mask.data());
    else
        scalar::leq_mask(pts, query.data(), mask.data());
}

bool any_leq(const PointsSoA& pts, std::span<const std::uint32_t> query) {
    if (active_backend() == Backend::Avx2) return avx2::any_leq(pts, query.data());
    return scalar::any_leq(pts, query.data());
}

}  // namespace scaffold::kernels
