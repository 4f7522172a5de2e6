#pragma once

// Indecomposable bundles on a (real) elliptic curve.
//
// Every indecomposable E of rank r and degree d is E' (x) F_h for a unique
// stable E' of rank r' = r/h and degree d' = d/h, where h = gcd(r, d) and
// F_h is the Atiyah bundle of rank h and degree 0. Since E' is determined by
// det E' in Pic^{d'}, an IndecClass is (r, d, det E').

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "rebc/moduli.hpp"

namespace rebc {

class IndecClass {
public:
    /// Throws InputError unless rank >= 1 and stable_det has degree d / gcd(r, d).
    IndecClass(std::int64_t rank, std::int64_t degree, PicClass stable_det);

    [[nodiscard]] std::int64_t rank() const { return rank_; }
    [[nodiscard]] std::int64_t degree() const { return degree_; }
    [[nodiscard]] const PicClass& stable_det() const { return stable_det_; }
    [[nodiscard]] std::int64_t h() const { return moduli_h(rank_, degree_); }
    [[nodiscard]] std::int64_t reduced_rank() const { return rank_ / h(); }
    [[nodiscard]] std::int64_t reduced_degree() const { return degree_ / h(); }

    friend bool operator==(const IndecClass&, const IndecClass&) = default;
    friend std::strong_ordering operator<=>(const IndecClass& l, const IndecClass& r) {
        if (auto cmp = l.rank_ <=> r.rank_; cmp != 0) return cmp;
        if (auto cmp = l.degree_ <=> r.degree_; cmp != 0) return cmp;
        return l.stable_det_ <=> r.stable_det_;
    }

private:
    std::int64_t rank_;
    std::int64_t degree_;
    PicClass stable_det_;
};

/// Numerology behind the uniqueness of the real structure on F_h: the
/// extension group H^1(F_{h-1}^*) is one-dimensional.
struct AtiyahExtensionCert {
    std::int64_t h = 0;
    std::int64_t euler_char_of_dual_step = 0;
    std::int64_t h0 = 1;
    std::int64_t h1 = 1;
};

/// F_h. Throws for h < 1.
IndecClass atiyah_F0(std::int64_t h);

/// F_{x0}(r, d) with the convention det E' = d' * x0 for its stable factor.
/// Atiyah's normalization may differ from this by an r'-torsion twist.
IndecClass atiyah_F(const CurveSpec& c, std::int64_t rank, std::int64_t degree);

/// E' -> E' (x) F_h. Throws InputError if s is not stable (gcd > 1).
IndecClass indec_from_stable(const ModuliPoint& s, std::int64_t h);

/// The stable factor E' as a point of M_X(r', d').
ModuliPoint stable_factor(const IndecClass& e);

/// (L2 (x) L1^{-1})^{r'} = O_X.
bool twist_equivalent(const CurveSpec& c, const PicClass& l1, const PicClass& l2,
                      std::int64_t reduced_rank);

/// All L with F_{x0}(r, d) (x) L = e: one coset of T_{r'}, sorted.
std::vector<PicClass> twist_fiber(const CurveSpec& c, const IndecClass& e);

/// Least element of twist_fiber(c, e).
PicClass classify_twist(const CurveSpec& c, const IndecClass& e);

/// F_{x0}(r, d) (x) L.
IndecClass apply_twist(const CurveSpec& c, std::int64_t rank, std::int64_t degree,
                       const PicClass& line);

/// The diagonal map I_X(r, d) -> Sym^h(Pic^{d'}) ~ M_X(r, d).
ModuliPoint include_in_moduli(const IndecClass& e);

IndecClass dual_indec(const IndecClass& e);
IndecClass sigma_indec(const CurveSpec& c, const IndecClass& e);
bool is_self_conjugate(const CurveSpec& c, const IndecClass& e);

/// Real or quaternionic, following the stable factor. Throws InputError if e
/// is not self-conjugate.
ModularTag real_or_quaternionic(const CurveSpec& c, const IndecClass& e);

/// Riemann-Roch: d + r (1 - g).
std::int64_t euler_char(std::int64_t rank, std::int64_t degree, std::int64_t genus);

/// Throws for h < 2 (F_1 = O_X has no extension step).
AtiyahExtensionCert atiyah_extension_cert(std::int64_t h);

/// Sigma-fixed locus of I_X(r, d), computed through the stable factor.
struct IndecRealLocusReport {
    std::int64_t rank = 0;
    std::int64_t degree = 0;
    std::int64_t h = 0;
    std::int64_t reduced_rank = 0;
    std::int64_t reduced_degree = 0;
    RealIsoTarget iso_target = RealIsoTarget::X;
    std::vector<PicRealComponent> components;
};

IndecRealLocusReport indec_real_locus(const CurveSpec& c, std::int64_t rank, std::int64_t degree);

}  // namespace rebc
