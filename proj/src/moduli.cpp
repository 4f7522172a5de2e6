#include "rebc/moduli.hpp"

#include <algorithm>
#include <numeric>

namespace rebc {

std::int64_t moduli_h(std::int64_t rank, std::int64_t degree) {
    if (rank < 1) throw InputError("rank must be at least 1");
    return std::gcd(rank, degree);
}

ModuliPoint::ModuliPoint(std::int64_t rank, std::int64_t degree, std::vector<PicClass> dets)
    : rank_(rank), degree_(degree), dets_(std::move(dets)) {
    const auto h = moduli_h(rank, degree);
    if (static_cast<std::int64_t>(dets_.size()) != h) {
        throw InputError("M_X(" + std::to_string(rank) + "," + std::to_string(degree) + ") needs " +
                         std::to_string(h) + " determinants, got " + std::to_string(dets_.size()));
    }
    for (const auto& l : dets_) {
        if (l.degree != degree / h) {
            throw InputError("summand determinant has degree " + std::to_string(l.degree) +
                             ", expected " + std::to_string(degree / h));
        }
    }
    std::sort(dets_.begin(), dets_.end());
}

ModuliPoint moduli_point(std::int64_t rank, std::int64_t degree, std::vector<PicClass> dets) {
    return {rank, degree, std::move(dets)};
}

PicClass det_map(const ModuliPoint& m) {
    PicClass out{};
    for (const auto& l : m.dets()) out = pic_tensor(out, l);
    return out;
}

ModuliPoint sigma_moduli(const CurveSpec& c, const ModuliPoint& m) {
    std::vector<PicClass> moved;
    moved.reserve(m.dets().size());
    for (const auto& l : m.dets()) moved.push_back(sigma_pic(c, l));
    return {m.rank(), m.degree(), std::move(moved)};
}

std::string to_string(FixedPointTag tag) {
    switch (tag) {
        case FixedPointTag::Real: return "real";
        case FixedPointTag::Quaternionic: return "quaternionic";
        case FixedPointTag::MixedPairs: return "mixed-pairs";
        case FixedPointTag::UnclassifiedSemistable: return "unclassified-semistable";
    }
    return "unknown";
}

FixedPointTag classify_fixed_point(const CurveSpec& c, const ModuliPoint& m) {
    if (sigma_moduli(c, m) != m) throw InputError("moduli point is not fixed by sigma");
    const bool all_fixed = std::all_of(m.dets().begin(), m.dets().end(),
                                       [&](const PicClass& l) { return sigma_pic(c, l) == l; });
    if (!all_fixed) return FixedPointTag::MixedPairs;
    if (m.h() > 1) return FixedPointTag::UnclassifiedSemistable;
    // h = 1: r and d coprime, so quaternionic structures exist only when the
    // curve has no real points (they need even rank and degree otherwise).
    return pic_fixed_tag(c, m.dets().front()) == ModularTag::Real ? FixedPointTag::Real
                                                                  : FixedPointTag::Quaternionic;
}

std::string to_string(ModuliIsoTarget target) {
    return target == ModuliIsoTarget::SymHOfX ? "sym_h_of_x" : "sym_h_of_pic0";
}

ModuliRealLocusReport moduli_real_locus(const CurveSpec& c, std::int64_t rank, std::int64_t degree) {
    ModuliRealLocusReport report;
    report.rank = rank;
    report.degree = degree;
    report.h = moduli_h(rank, degree);
    const auto d_prime = degree / report.h;

    const auto pic = pic_real_locus(c, d_prime);
    report.iso_target = pic.iso_target == RealIsoTarget::X ? ModuliIsoTarget::SymHOfX
                                                           : ModuliIsoTarget::SymHOfPic0;

    if (report.h == 1) {
        report.complete = true;
        for (const auto& k : pic.components) {
            const auto tag = k.tag == ModularTag::Real ? FixedPointTag::Real : FixedPointTag::Quaternionic;
            report.components.push_back({k.circle.label, k.circle, tag, "circle"});
        }
        report.empty = report.components.empty();
        report.has_individually_fixed_stratum = !report.empty;
        return report;
    }

    // h > 1: a fixed multiset is a union of fixed classes and pairs
    // {L, sigma(L)}. With no fixed classes it needs h even; neither stratum
    // is classified here.
    report.complete = false;
    report.has_individually_fixed_stratum = !pic.components.empty();
    report.has_mixed_pair_stratum = report.has_individually_fixed_stratum || report.h % 2 == 0;
    report.empty = !report.has_mixed_pair_stratum;
    return report;
}

ModuliPoint tensor_by_line(const ModuliPoint& m, const PicClass& line) {
    if (line.degree != 0) throw InputError("tensor_by_line needs a degree-0 line bundle");
    const auto shift = scalar_mul(m.reduced_rank(), line.u);
    std::vector<PicClass> moved;
    moved.reserve(m.dets().size());
    for (const auto& l : m.dets()) moved.push_back({l.degree, add(l.u, shift)});
    return {m.rank(), m.degree(), std::move(moved)};
}

bool fixed_det_fiber_contains(const CurveSpec&, std::int64_t rank, const PicClass& ldet,
                              const ModuliPoint& m) {
    if (ldet.degree != m.degree()) {
        throw InputError("determinant degree " + std::to_string(ldet.degree) +
                         " does not match moduli degree " + std::to_string(m.degree()));
    }
    return m.rank() == rank && det_map(m) == ldet;
}

std::int64_t fixed_det_fiber_dim(std::int64_t rank, std::int64_t degree) {
    return moduli_h(rank, degree) - 1;
}

std::vector<PicClass> rep_normal_form(std::span<const PicClass> lines) {
    std::vector<PicClass> out(lines.begin(), lines.end());
    std::sort(out.begin(), out.end());
    return out;
}

ModuliPoint rep_to_moduli(const CurveSpec&, std::span<const PicClass> lines) {
    for (const auto& l : lines) {
        if (l.degree != 0) throw InputError("representation model needs degree-0 line bundles");
    }
    return {static_cast<std::int64_t>(lines.size()), 0, rep_normal_form(lines)};
}

ModuliPoint eta_moduli(const CurveSpec& c, const ModuliPoint& m) {
    if (m.degree() != 0) throw InputError("eta_moduli is defined on M_X(r,0) only");
    std::vector<PicClass> moved;
    moved.reserve(m.dets().size());
    for (const auto& l : m.dets()) moved.push_back(eta_line(c, l));
    return {m.rank(), m.degree(), std::move(moved)};
}

}  // namespace rebc
