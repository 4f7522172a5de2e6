#pragma once

// The complex torus C / (Z + tau Z) in exact lattice coordinates, together
// with the three topological types of real structure on a genus-1 curve.
//
// A point z = a + b*tau is stored as the pair (a, b) reduced into [0,1)^2.
// Complex conjugation acts affinely on these coordinates, so no
// transcendental embedding is ever needed.

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "rebc/rational.hpp"

namespace rebc {

enum class CurveKind {
    TwoComponents,  ///< tau = i*y, sigma(z) = conj(z); two real circles
    OneComponent,   ///< tau = 1/2 + i*y; one real circle
    NoRealPoints,   ///< tau = i*y, sigma(z) = conj(z) + 1/2; no real points
};

std::string to_string(CurveKind kind);
CurveKind parse_curve_kind(std::string_view text);

/// Number of connected components of the real locus X^sigma.
int real_component_count(CurveKind kind);

class TorusPoint {
public:
    TorusPoint() = default;
    TorusPoint(Frac a, Frac b) : a_(frac_part(a)), b_(frac_part(b)) {}

    [[nodiscard]] const Frac& a() const { return a_; }
    [[nodiscard]] const Frac& b() const { return b_; }

    [[nodiscard]] bool is_zero() const { return a_ == 0 && b_ == 0; }

    friend bool operator==(const TorusPoint& p, const TorusPoint& q) {
        return p.a_ == q.a_ && p.b_ == q.b_;
    }
    /// Lexicographic on (a, b); used for every canonical multiset order.
    friend std::strong_ordering operator<=>(const TorusPoint& p, const TorusPoint& q);

private:
    Frac a_{0};
    Frac b_{0};
};

TorusPoint add(const TorusPoint& p, const TorusPoint& q);
TorusPoint neg(const TorusPoint& p);
TorusPoint sub(const TorusPoint& p, const TorusPoint& q);
TorusPoint scalar_mul(std::int64_t n, const TorusPoint& p);

struct CurveSpec {
    CurveKind kind = CurveKind::TwoComponents;
    Frac y{1};              ///< imaginary part of tau; reported, never used in a classification
    TorusPoint basepoint{};  ///< marked point x0; need not be real

    CurveSpec() = default;
    /// Throws InputError unless y > 0.
    CurveSpec(CurveKind kind, Frac y, TorusPoint basepoint = {});

    /// Real part of tau in the lattice normal form: 0 or 1/2.
    [[nodiscard]] Frac tau_real_part() const;

    friend bool operator==(const CurveSpec&, const CurveSpec&) = default;
};

/// Integer 2x2 matrix acting on lattice coordinates (a, b) as column vectors.
struct LatticeMatrix {
    std::int64_t m00, m01, m10, m11;
    [[nodiscard]] TorusPoint apply(const TorusPoint& p) const;
};

/// The linear part of sigma: (a, b) -> (a + 2 Re(tau) b, -b).
LatticeMatrix sigma_linear_part(const CurveSpec& c);

/// The translation part of sigma: (1/2, 0) for NoRealPoints, zero otherwise.
TorusPoint sigma_shift(const CurveSpec& c);

/// The anti-holomorphic involution sigma in lattice coordinates.
TorusPoint sigma_point(const CurveSpec& c, const TorusPoint& p);

/// A fixed circle {b = const} of one of the Galois involutions, parametrized
/// by the free coordinate a in [0,1).
struct ComponentDescriptor {
    std::string label;  ///< "b=0" or "b=1/2"
    Frac b{0};
    std::string free_coordinate = "a";

    [[nodiscard]] bool contains(const TorusPoint& p) const { return p.b() == b; }
    friend bool operator==(const ComponentDescriptor&, const ComponentDescriptor&) = default;
};

ComponentDescriptor circle_at(const Frac& b);

/// Fixed circles of p -> L(p) + k * sigma_shift, where L is the linear part
/// of sigma. k = 1 is sigma itself; k = d is the Galois action on Pic^d.
/// Solutions satisfy 2b = 0 and 2 Re(tau) b + k s = 0 (mod 1).
std::vector<ComponentDescriptor> galois_fixed_circles(const CurveSpec& c, std::int64_t k);

/// Real locus of the curve, in the canonical order {b=0} < {b=1/2}.
std::vector<ComponentDescriptor> real_locus_components(const CurveSpec& c);

/// The N^2 points (i/N, j/N) in lexicographic order. Throws if N < 1.
std::vector<TorusPoint> torsion_points(std::int64_t n);

}  // namespace rebc
