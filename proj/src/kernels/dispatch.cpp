#include <atomic>
#include <cstdlib>
#include <string_view>

#include "rebc/kernels/grid_kernels.hpp"

namespace rebc::kernels {

std::string to_string(Backend backend) { return backend == Backend::Avx2 ? "avx2" : "scalar"; }

bool avx2_available() {
#if defined(REBC_HAVE_AVX2_KERNELS) && (defined(__x86_64__) || defined(__i386__))
    static const bool supported = __builtin_cpu_supports("avx2");
    return supported;
#else
    return false;
#endif
}

namespace {

Backend initial_backend() {
    if (const char* env = std::getenv("REBC_SIMD"); env && std::string_view(env) == "scalar") {
        return Backend::Scalar;
    }
    return avx2_available() ? Backend::Avx2 : Backend::Scalar;
}

std::atomic<Backend>& backend_slot() {
    static std::atomic<Backend> slot{initial_backend()};
    return slot;
}

}  // namespace

Backend active_backend() { return backend_slot().load(std::memory_order_relaxed); }

void set_backend(Backend backend) {
    if (backend == Backend::Avx2 && !avx2_available()) backend = Backend::Scalar;
    backend_slot().store(backend, std::memory_order_relaxed);
}

void apply(const AffineIndexMap& map, std::span<const std::int32_t> i, std::span<const std::int32_t> j,
           std::span<std::int32_t> out_i, std::span<std::int32_t> out_j) {
    validate(map);
    if (active_backend() == Backend::Avx2) return avx2::apply(map, i, j, out_i, out_j);
    scalar::apply(map, i, j, out_i, out_j);
}

void fixed_mask(const AffineIndexMap& map, std::span<const std::int32_t> i,
                std::span<const std::int32_t> j, std::span<std::uint8_t> mask) {
    validate(map);
    if (active_backend() == Backend::Avx2) return avx2::fixed_mask(map, i, j, mask);
    scalar::fixed_mask(map, i, j, mask);
}

}  // namespace rebc::kernels
