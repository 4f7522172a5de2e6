#include "rebc/kernels/grid_kernels.hpp"

#include <stdexcept>

namespace rebc::kernels {

void validate(const AffineIndexMap& map) {
    if (map.n < 1) throw std::invalid_argument("grid resolution must be positive");
    for (const auto m : {map.m00, map.m01, map.m10, map.m11}) {
        if (m < -2 || m > 2) throw std::invalid_argument("affine index map coefficient out of range");
    }
    for (const auto s : {map.s0, map.s1}) {
        if (s < 0 || s >= map.n) throw std::invalid_argument("affine index map shift out of range");
    }
}

namespace scalar {

namespace {

inline std::int32_t mod(std::int32_t v, std::int32_t n) {
    const auto r = v % n;
    return r < 0 ? r + n : r;
}

void check_sizes(std::size_t a, std::size_t b, std::size_t c, std::size_t d) {
    if (a != b || a != c || a != d) throw std::invalid_argument("kernel span length mismatch");
}

}  // namespace

void apply(const AffineIndexMap& map, std::span<const std::int32_t> i, std::span<const std::int32_t> j,
           std::span<std::int32_t> out_i, std::span<std::int32_t> out_j) {
    check_sizes(i.size(), j.size(), out_i.size(), out_j.size());
    for (std::size_t k = 0; k < i.size(); ++k) {
        out_i[k] = mod(map.m00 * i[k] + map.m01 * j[k] + map.s0, map.n);
        out_j[k] = mod(map.m10 * i[k] + map.m11 * j[k] + map.s1, map.n);
    }
}

void fixed_mask(const AffineIndexMap& map, std::span<const std::int32_t> i,
                std::span<const std::int32_t> j, std::span<std::uint8_t> mask) {
    check_sizes(i.size(), j.size(), mask.size(), mask.size());
    for (std::size_t k = 0; k < i.size(); ++k) {
        const auto ii = mod(map.m00 * i[k] + map.m01 * j[k] + map.s0, map.n);
        const auto jj = mod(map.m10 * i[k] + map.m11 * j[k] + map.s1, map.n);
        mask[k] = static_cast<std::uint8_t>(ii == i[k] && jj == j[k]);
    }
}

}  // namespace scalar
}  // namespace rebc::kernels
