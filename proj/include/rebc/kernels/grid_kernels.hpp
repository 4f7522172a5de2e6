#pragma once

// Data-parallel kernels over grid index arrays.
//
// A grid point (i/N, j/N) is stored as the index pair (i, j) in [0, N)^2.
// Every involution in this library is affine with coefficients in {-1, 0, 1}
// in lattice coordinates and maps the grid to itself when N is even, so on
// the grid it becomes an integer affine map mod N. The scalar kernels are the
// reference; the AVX2 kernels must agree with them bit for bit.

#include <cstdint>
#include <span>
#include <string>

namespace rebc::kernels {

struct AffineIndexMap {
    std::int32_t m00 = 1, m01 = 0, m10 = 0, m11 = 1;
    std::int32_t s0 = 0, s1 = 0;
    std::int32_t n = 1;
};

/// Throws std::invalid_argument unless n >= 1, |m_ij| <= 2 and 0 <= s_k < n.
void validate(const AffineIndexMap& map);

enum class Backend { Scalar, Avx2 };
std::string to_string(Backend backend);

bool avx2_available();

/// Backend used by the dispatching entry points. Defaults to AVX2 when the
/// CPU supports it; the environment variable REBC_SIMD=scalar forces scalar.
Backend active_backend();
void set_backend(Backend backend);

/// out = map(i, j) elementwise. All spans must have equal length and inputs
/// must lie in [0, n).
void apply(const AffineIndexMap& map, std::span<const std::int32_t> i, std::span<const std::int32_t> j,
           std::span<std::int32_t> out_i, std::span<std::int32_t> out_j);

/// mask[k] = 1 if map fixes (i[k], j[k]), else 0.
void fixed_mask(const AffineIndexMap& map, std::span<const std::int32_t> i,
                std::span<const std::int32_t> j, std::span<std::uint8_t> mask);

namespace scalar {
void apply(const AffineIndexMap& map, std::span<const std::int32_t> i, std::span<const std::int32_t> j,
           std::span<std::int32_t> out_i, std::span<std::int32_t> out_j);
void fixed_mask(const AffineIndexMap& map, std::span<const std::int32_t> i,
                std::span<const std::int32_t> j, std::span<std::uint8_t> mask);
}  // namespace scalar

namespace avx2 {
// Callable only when avx2_available().
void apply(const AffineIndexMap& map, std::span<const std::int32_t> i, std::span<const std::int32_t> j,
           std::span<std::int32_t> out_i, std::span<std::int32_t> out_j);
void fixed_mask(const AffineIndexMap& map, std::span<const std::int32_t> i,
                std::span<const std::int32_t> j, std::span<std::uint8_t> mask);
}  // namespace avx2

}  // namespace rebc::kernels
