#pragma once

// Line bundle classes of every degree on a real elliptic curve.
//
// A class in Pic^d is stored intrinsically as (d, u) where u is the
// Abel-Jacobi coordinate: the divisor sum n_i x_i has u = sum n_i x_i in the
// torus. No identification Pic^d ~ Pic^0 is applied implicitly; over R that
// identification depends on the curve type and the parity of d.

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rebc/torus.hpp"

namespace rebc {

struct PicClass {
    std::int64_t degree = 0;
    TorusPoint u{};

    friend bool operator==(const PicClass&, const PicClass&) = default;
    friend std::strong_ordering operator<=>(const PicClass& l, const PicClass& r) {
        if (auto cmp = l.degree <=> r.degree; cmp != 0) return cmp;
        return l.u <=> r.u;
    }
};

/// O_X.
inline PicClass trivial_class() { return {0, {}}; }

/// L(x): the degree-1 class of a single point.
inline PicClass point_class(const TorusPoint& x) { return {1, x}; }

enum class ModularTag { Real, Quaternionic };
std::string to_string(ModularTag tag);

enum class RealIsoTarget { X, Pic0 };
std::string to_string(RealIsoTarget target);

struct PicRealComponent {
    ComponentDescriptor circle;
    ModularTag tag = ModularTag::Real;
    friend bool operator==(const PicRealComponent&, const PicRealComponent&) = default;
};

struct PicRealLocusReport {
    std::int64_t degree = 0;
    std::vector<PicRealComponent> components;
    RealIsoTarget iso_target = RealIsoTarget::X;
};

/// Divisor class of a multiset of points; the degree is its size.
PicClass abel_jacobi(const CurveSpec& c, std::span<const TorusPoint> points);

/// Divisor class of sum n_i x_i.
PicClass abel_jacobi(const CurveSpec& c,
                     std::span<const std::pair<TorusPoint, std::int64_t>> divisor);

/// L -> conj(sigma^* L): (d, u) -> (d, lin(u) + d * shift).
PicClass sigma_pic(const CurveSpec& c, const PicClass& line);

PicClass pic_tensor(const PicClass& l1, const PicClass& l2);
PicClass pic_dual(const PicClass& line);
PicClass pic_power(const PicClass& line, std::int64_t n);

/// Fixed locus of sigma_pic on Pic^d with real/quaternionic tags.
///
/// When X^sigma is empty and d is even, {b=0} is tagged real and {b=1/2}
/// quaternionic: O_X sits at the origin, and tensoring by the real class of
/// x0 + sigma(x0), whose coordinate (1/2, 0) also has b = 0, moves between
/// even degrees without changing the tag.
PicRealLocusReport pic_real_locus(const CurveSpec& c, std::int64_t degree);

/// Tag of a sigma-fixed class; throws InputError if `line` is not fixed.
ModularTag pic_fixed_tag(const CurveSpec& c, const PicClass& line);

/// eta_1: L -> conj(sigma^* L)^*, defined on Pic^0 only.
PicClass eta_line(const CurveSpec& c, const PicClass& line);

}  // namespace rebc
