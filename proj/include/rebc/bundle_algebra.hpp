#pragma once

// Formal direct sums of indecomposable classes. By Krull-Schmidt the sorted
// multiset of summands is a complete isomorphism invariant.

#include <cstdint>
#include <vector>

#include "rebc/indecomposable.hpp"

namespace rebc {

class FormalBundle {
public:
    /// Sorts the summands. Throws InputError on an empty list.
    explicit FormalBundle(std::vector<IndecClass> summands);

    [[nodiscard]] const std::vector<IndecClass>& summands() const { return summands_; }
    [[nodiscard]] std::int64_t rank() const;
    [[nodiscard]] std::int64_t degree() const;

    friend bool operator==(const FormalBundle&, const FormalBundle&) = default;

private:
    std::vector<IndecClass> summands_;
};

FormalBundle normal_form(const FormalBundle& b);
inline bool isomorphic(const FormalBundle& x, const FormalBundle& y) { return normal_form(x) == normal_form(y); }

Frac slope(const FormalBundle& b);

// Indecomposables are semi-stable, so a sum is semi-stable exactly when all
// summand slopes agree; any summand of maximal slope destabilizes otherwise.
bool is_semistable(const FormalBundle& b);
bool is_stable(const FormalBundle& b);
bool is_polystable(const FormalBundle& b);

/// S-equivalence class: each summand E' (x) F_k contributes k copies of det E'.
/// Throws InputError if b is not semi-stable.
ModuliPoint gr(const FormalBundle& b);

bool s_equivalent(const FormalBundle& b1, const FormalBundle& b2);

FormalBundle direct_sum(const FormalBundle& b1, const FormalBundle& b2);
FormalBundle dual(const FormalBundle& b);
/// b (x) L for deg L = 0.
FormalBundle twist(const FormalBundle& b, const PicClass& line);
FormalBundle sigma_bundle(const CurveSpec& c, const FormalBundle& b);

/// Sum of the summand Euler characteristics on a genus-1 curve.
std::int64_t euler_char(const FormalBundle& b);

}  // namespace rebc
