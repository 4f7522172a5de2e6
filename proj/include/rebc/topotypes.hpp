#pragma once

// Topological types of real and quaternionic bundles, and component tables
// for real loci of moduli spaces.

#include <cstdint>
#include <string>
#include <vector>

#include "rebc/picard.hpp"

namespace rebc {

struct TopoTypeReal {
    std::int64_t rank = 0;
    std::int64_t degree = 0;
    std::vector<int> w1;  ///< one bit per real circle, ordered {b=0} < {b=1/2}
    friend bool operator==(const TopoTypeReal&, const TopoTypeReal&) = default;
};

struct TopoTypeQuat {
    std::int64_t rank = 0;
    std::int64_t degree = 0;
    friend bool operator==(const TopoTypeQuat&, const TopoTypeQuat&) = default;
};

/// Every admissible w1 vector (sum of bits = d mod 2), lexicographic order.
std::vector<TopoTypeReal> enumerate_real_types(const CurveSpec& c, std::int64_t rank, std::int64_t degree);

/// Existence of a quaternionic bundle of rank r, degree d on a genus-g curve
/// with the real-circle count of c.
bool quaternionic_exists(const CurveSpec& c, std::int64_t rank, std::int64_t degree, std::int64_t genus);

/// Same criterion with the circle count n supplied directly.
bool quaternionic_exists(int n, std::int64_t rank, std::int64_t degree, std::int64_t genus);

struct TopoComponent {
    std::string label;
    ModularTag tag = ModularTag::Real;
    std::string diffeo_type = "circle";
    friend bool operator==(const TopoComponent&, const TopoComponent&) = default;
};

struct GenusOneTable {
    std::int64_t rank = 0;
    std::int64_t degree = 0;
    std::int64_t h = 0;
    std::int64_t reduced_degree = 0;
    RealIsoTarget iso_target = RealIsoTarget::X;
    std::vector<TopoComponent> components;
    /// Set when h > 1: the table describes I_X(r, d), a curve inside the
    /// h-dimensional M_X(r, d), not the full real locus of Sym^h.
    bool sym_h_caveat = false;
};

/// Real locus of I_X(r, d) ~ M_X(r', d') read off from the curve type and the
/// parity of d'. Computed from the table alone; it does not consult the
/// Picard or moduli modules.
GenusOneTable component_table_genus1(const CurveSpec& c, std::int64_t rank, std::int64_t degree);

struct HigherGenusCount {
    std::int64_t count = 0;
    std::vector<ModularTag> tags;
    std::vector<std::vector<int>> w1;  ///< indexes the components when n > 0
};

/// Component count of M_X(r, d)^sigma for g >= 2, gcd(r, d) = 1, and n real
/// circles (0 <= n <= g + 1).
HigherGenusCount component_count_higher_genus(int n, std::int64_t genus, std::int64_t rank,
                                              std::int64_t degree);

}  // namespace rebc
