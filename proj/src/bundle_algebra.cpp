#include "rebc/bundle_algebra.hpp"

#include <algorithm>
#include <numeric>

namespace rebc {

FormalBundle::FormalBundle(std::vector<IndecClass> summands) : summands_(std::move(summands)) {
    if (summands_.empty()) throw InputError("a bundle needs at least one summand");
    std::sort(summands_.begin(), summands_.end());
}

std::int64_t FormalBundle::rank() const {
    return std::accumulate(summands_.begin(), summands_.end(), std::int64_t{0},
                           [](std::int64_t acc, const IndecClass& e) { return acc + e.rank(); });
}

std::int64_t FormalBundle::degree() const {
    return std::accumulate(summands_.begin(), summands_.end(), std::int64_t{0},
                           [](std::int64_t acc, const IndecClass& e) { return acc + e.degree(); });
}

FormalBundle normal_form(const FormalBundle& b) { return FormalBundle(b.summands()); }

Frac slope(const FormalBundle& b) { return Frac(b.degree(), b.rank()); }

namespace {

Frac summand_slope(const IndecClass& e) { return Frac(e.degree(), e.rank()); }

}  // namespace

bool is_semistable(const FormalBundle& b) {
    const auto mu = summand_slope(b.summands().front());
    return std::all_of(b.summands().begin(), b.summands().end(),
                       [&](const IndecClass& e) { return summand_slope(e) == mu; });
}

bool is_stable(const FormalBundle& b) {
    return b.summands().size() == 1 && b.summands().front().h() == 1;
}

bool is_polystable(const FormalBundle& b) {
    return is_semistable(b) && std::all_of(b.summands().begin(), b.summands().end(),
                                           [](const IndecClass& e) { return e.h() == 1; });
}

ModuliPoint gr(const FormalBundle& b) {
    if (!is_semistable(b)) throw InputError("gr is defined for semi-stable bundles only");
    std::vector<PicClass> dets;
    for (const auto& e : b.summands()) {
        dets.insert(dets.end(), static_cast<std::size_t>(e.h()), e.stable_det());
    }
    return {b.rank(), b.degree(), std::move(dets)};
}

bool s_equivalent(const FormalBundle& b1, const FormalBundle& b2) { return gr(b1) == gr(b2); }

FormalBundle direct_sum(const FormalBundle& b1, const FormalBundle& b2) {
    auto all = b1.summands();
    all.insert(all.end(), b2.summands().begin(), b2.summands().end());
    return FormalBundle(std::move(all));
}

FormalBundle dual(const FormalBundle& b) {
    std::vector<IndecClass> out;
    out.reserve(b.summands().size());
    for (const auto& e : b.summands()) out.push_back(dual_indec(e));
    return FormalBundle(std::move(out));
}

FormalBundle twist(const FormalBundle& b, const PicClass& line) {
    if (line.degree != 0) throw InputError("twist needs a degree-0 line bundle");
    std::vector<IndecClass> out;
    out.reserve(b.summands().size());
    for (const auto& e : b.summands()) {
        const auto& det = e.stable_det();
        out.emplace_back(e.rank(), e.degree(),
                         PicClass{det.degree, add(det.u, scalar_mul(e.reduced_rank(), line.u))});
    }
    return FormalBundle(std::move(out));
}

FormalBundle sigma_bundle(const CurveSpec& c, const FormalBundle& b) {
    std::vector<IndecClass> out;
    out.reserve(b.summands().size());
    for (const auto& e : b.summands()) out.push_back(sigma_indec(c, e));
    return FormalBundle(std::move(out));
}

std::int64_t euler_char(const FormalBundle& b) {
    std::int64_t total = 0;
    for (const auto& e : b.summands()) total += euler_char(e.rank(), e.degree(), 1);
    return total;
}

}  // namespace rebc
