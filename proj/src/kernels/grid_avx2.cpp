// Compiled with -mavx2 only; reached through the dispatcher after a CPU check.

#include "rebc/kernels/grid_kernels.hpp"

#include <stdexcept>

#if defined(__AVX2__)
#include <immintrin.h>
#endif

namespace rebc::kernels::avx2 {

#if defined(__AVX2__)

namespace {

constexpr std::size_t kLanes = 8;

// v in [0, 16n) -> v mod n, by conditional subtraction of 8n, 4n, 2n, n.
inline __m256i reduce(__m256i v, std::int32_t n) {
    for (const std::int32_t k : {8, 4, 2, 1}) {
        const __m256i kn = _mm256_set1_epi32(k * n);
        // v >= kn  <=>  !(kn > v)
        const __m256i lt = _mm256_cmpgt_epi32(kn, v);
        v = _mm256_sub_epi32(v, _mm256_andnot_si256(lt, kn));
    }
    return v;
}

struct Lanes {
    __m256i m00, m01, m10, m11, s0, s1;
    std::int32_t n;
};

inline Lanes broadcast(const AffineIndexMap& map) {
    // Offsetting by 4n makes every m*i + m*j + s nonnegative for |m| <= 2.
    return {_mm256_set1_epi32(map.m00), _mm256_set1_epi32(map.m01), _mm256_set1_epi32(map.m10),
            _mm256_set1_epi32(map.m11), _mm256_set1_epi32(map.s0 + 4 * map.n),
            _mm256_set1_epi32(map.s1 + 4 * map.n), map.n};
}

inline void image(const Lanes& L, __m256i vi, __m256i vj, __m256i& oi, __m256i& oj) {
    const __m256i ai = _mm256_add_epi32(_mm256_mullo_epi32(L.m00, vi), _mm256_mullo_epi32(L.m01, vj));
    const __m256i aj = _mm256_add_epi32(_mm256_mullo_epi32(L.m10, vi), _mm256_mullo_epi32(L.m11, vj));
    oi = reduce(_mm256_add_epi32(ai, L.s0), L.n);
    oj = reduce(_mm256_add_epi32(aj, L.s1), L.n);
}

inline void check(const AffineIndexMap& map, std::size_t a, std::size_t b, std::size_t c, std::size_t d) {
    if (a != b || a != c || a != d) throw std::invalid_argument("kernel span length mismatch");
    if (map.n > (1 << 26)) throw std::invalid_argument("grid resolution too large for the AVX2 kernel");
}

}  // namespace

void apply(const AffineIndexMap& map, std::span<const std::int32_t> i, std::span<const std::int32_t> j,
           std::span<std::int32_t> out_i, std::span<std::int32_t> out_j) {
    check(map, i.size(), j.size(), out_i.size(), out_j.size());
    const auto lanes = broadcast(map);
    const std::size_t size = i.size();
    const std::size_t simd_end = size / kLanes * kLanes;
    for (std::size_t k = 0; k < simd_end; k += kLanes) {
        const __m256i vi = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(i.data() + k));
        const __m256i vj = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(j.data() + k));
        __m256i oi, oj;
        image(lanes, vi, vj, oi, oj);
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(out_i.data() + k), oi);
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(out_j.data() + k), oj);
    }
    if (simd_end < size) {
        scalar::apply(map, i.subspan(simd_end), j.subspan(simd_end), out_i.subspan(simd_end),
                      out_j.subspan(simd_end));
    }
}

void fixed_mask(const AffineIndexMap& map, std::span<const std::int32_t> i,
                std::span<const std::int32_t> j, std::span<std::uint8_t> mask) {
    check(map, i.size(), j.size(), mask.size(), mask.size());
    const auto lanes = broadcast(map);
    const std::size_t size = i.size();
    const std::size_t simd_end = size / kLanes * kLanes;
    for (std::size_t k = 0; k < simd_end; k += kLanes) {
        const __m256i vi = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(i.data() + k));
        const __m256i vj = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(j.data() + k));
        __m256i oi, oj;
        image(lanes, vi, vj, oi, oj);
        const __m256i eq = _mm256_and_si256(_mm256_cmpeq_epi32(oi, vi), _mm256_cmpeq_epi32(oj, vj));
        const int bits = _mm256_movemask_ps(_mm256_castsi256_ps(eq));
        for (std::size_t lane = 0; lane < kLanes; ++lane) {
            mask[k + lane] = static_cast<std::uint8_t>((bits >> lane) & 1);
        }
    }
    if (simd_end < size) {
        scalar::fixed_mask(map, i.subspan(simd_end), j.subspan(simd_end), mask.subspan(simd_end));
    }
}

#else

void apply(const AffineIndexMap&, std::span<const std::int32_t>, std::span<const std::int32_t>,
           std::span<std::int32_t>, std::span<std::int32_t>) {
    throw std::logic_error("AVX2 kernels were not compiled into this build");
}

void fixed_mask(const AffineIndexMap&, std::span<const std::int32_t>, std::span<const std::int32_t>,
                std::span<std::uint8_t>) {
    throw std::logic_error("AVX2 kernels were not compiled into this build");
}

#endif

}  // namespace rebc::kernels::avx2
