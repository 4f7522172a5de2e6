#pragma once

// S-equivalence classes in M_X(r, d) over a real elliptic curve.
//
// With h = gcd(r, d), every semi-stable bundle is S-equivalent to a unique
// poly-stable E_1 + ... + E_h whose summands are stable of rank r/h and
// degree d/h. The multiset [det E_i] in Sym^h(Pic^{d/h}) is a complete
// invariant, and this is the representation used here.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rebc/picard.hpp"

namespace rebc {

/// gcd(r, d) with gcd(r, 0) = r. Throws for r < 1.
std::int64_t moduli_h(std::int64_t rank, std::int64_t degree);

class ModuliPoint {
public:
    /// Validates |dets| = gcd(r, d) and every degree = d / h; sorts dets.
    ModuliPoint(std::int64_t rank, std::int64_t degree, std::vector<PicClass> dets);

    [[nodiscard]] std::int64_t rank() const { return rank_; }
    [[nodiscard]] std::int64_t degree() const { return degree_; }
    [[nodiscard]] std::int64_t h() const { return static_cast<std::int64_t>(dets_.size()); }
    [[nodiscard]] std::int64_t reduced_rank() const { return rank_ / h(); }
    [[nodiscard]] std::int64_t reduced_degree() const { return degree_ / h(); }
    [[nodiscard]] const std::vector<PicClass>& dets() const { return dets_; }

    friend bool operator==(const ModuliPoint&, const ModuliPoint&) = default;

private:
    std::int64_t rank_;
    std::int64_t degree_;
    std::vector<PicClass> dets_;
};

ModuliPoint moduli_point(std::int64_t rank, std::int64_t degree, std::vector<PicClass> dets);

/// det E = tensor product of the summand determinants.
PicClass det_map(const ModuliPoint& m);

ModuliPoint sigma_moduli(const CurveSpec& c, const ModuliPoint& m);

enum class FixedPointTag { Real, Quaternionic, MixedPairs, UnclassifiedSemistable };
std::string to_string(FixedPointTag tag);

/// Modular meaning of a sigma-fixed class. Throws InputError if m is not fixed.
FixedPointTag classify_fixed_point(const CurveSpec& c, const ModuliPoint& m);

enum class ModuliIsoTarget { SymHOfX, SymHOfPic0 };
std::string to_string(ModuliIsoTarget target);

struct ModuliRealComponent {
    std::string label;
    ComponentDescriptor circle;  ///< circle of the determinant in Pic^d
    FixedPointTag tag = FixedPointTag::Real;
    std::string diffeo_type = "circle";
};

struct ModuliRealLocusReport {
    std::int64_t rank = 0;
    std::int64_t degree = 0;
    std::int64_t h = 0;
    ModuliIsoTarget iso_target = ModuliIsoTarget::SymHOfX;
    /// True when the component analysis below is complete (h = 1).
    bool complete = false;
    bool empty = false;
    std::vector<ModuliRealComponent> components;
    /// For h > 1: which strata of sigma-fixed multisets exist.
    bool has_individually_fixed_stratum = false;
    bool has_mixed_pair_stratum = false;
};

ModuliRealLocusReport moduli_real_locus(const CurveSpec& c, std::int64_t rank, std::int64_t degree);

/// E -> E (x) L for deg L = 0; each summand determinant moves by r' * u_L.
ModuliPoint tensor_by_line(const ModuliPoint& m, const PicClass& line);

/// m lies over Ldet under det. Throws InputError on a degree mismatch.
bool fixed_det_fiber_contains(const CurveSpec& c, std::int64_t rank, const PicClass& ldet,
                              const ModuliPoint& m);

/// Dimension h - 1 of M_X(r, L) ~ P^{h-1}.
std::int64_t fixed_det_fiber_dim(std::int64_t rank, std::int64_t degree);

/// (L_1, ..., L_r) -> L_1 + ... + L_r in M_X(r, 0).
ModuliPoint rep_to_moduli(const CurveSpec& c, std::span<const PicClass> lines);

/// The S_r quotient of a tuple of degree-0 classes: its sorted form.
std::vector<PicClass> rep_normal_form(std::span<const PicClass> lines);

/// eta_r on M_X(r, 0): eta_1 applied to each determinant.
ModuliPoint eta_moduli(const CurveSpec& c, const ModuliPoint& m);

}  // namespace rebc
