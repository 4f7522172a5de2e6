#include "rebc/indecomposable.hpp"

#include <algorithm>

namespace rebc {

IndecClass::IndecClass(std::int64_t rank, std::int64_t degree, PicClass stable_det)
    : rank_(rank), degree_(degree), stable_det_(stable_det) {
    const auto h = moduli_h(rank, degree);
    if (stable_det_.degree != degree / h) {
        throw InputError("stable factor determinant has degree " + std::to_string(stable_det_.degree) +
                         ", expected " + std::to_string(degree / h));
    }
}

IndecClass atiyah_F0(std::int64_t h) {
    if (h < 1) throw InputError("Atiyah bundle rank must be at least 1");
    return {h, 0, trivial_class()};
}

IndecClass atiyah_F(const CurveSpec& c, std::int64_t rank, std::int64_t degree) {
    const auto h = moduli_h(rank, degree);
    return {rank, degree, pic_power(point_class(c.basepoint), degree / h)};
}

IndecClass indec_from_stable(const ModuliPoint& s, std::int64_t h) {
    if (s.h() != 1) throw InputError("indec_from_stable needs a stable class (coprime rank and degree)");
    if (h < 1) throw InputError("Atiyah bundle rank must be at least 1");
    return {s.rank() * h, s.degree() * h, s.dets().front()};
}

ModuliPoint stable_factor(const IndecClass& e) {
    return {e.reduced_rank(), e.reduced_degree(), {e.stable_det()}};
}

bool twist_equivalent(const CurveSpec&, const PicClass& l1, const PicClass& l2,
                      std::int64_t reduced_rank) {
    if (l1.degree != 0 || l2.degree != 0) throw InputError("twists must have degree 0");
    if (reduced_rank < 1) throw InputError("r' must be at least 1");
    return scalar_mul(reduced_rank, sub(l2.u, l1.u)).is_zero();
}

std::vector<PicClass> twist_fiber(const CurveSpec& c, const IndecClass& e) {
    const auto base = atiyah_F(c, e.rank(), e.degree());
    const auto delta = sub(e.stable_det().u, base.stable_det().u);
    const auto n = e.reduced_rank();
    // Frac(i) + delta.a() lies in [i, i+1), so dividing by n enumerates the n
    // preimages of delta.a under multiplication by n; likewise for b.
    std::vector<PicClass> out;
    out.reserve(static_cast<std::size_t>(n * n));
    for (std::int64_t i = 0; i < n; ++i) {
        for (std::int64_t j = 0; j < n; ++j) {
            out.push_back({0, {(delta.a() + Frac(i)) / Frac(n), (delta.b() + Frac(j)) / Frac(n)}});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

PicClass classify_twist(const CurveSpec& c, const IndecClass& e) {
    const auto base = atiyah_F(c, e.rank(), e.degree());
    const auto delta = sub(e.stable_det().u, base.stable_det().u);
    const Frac n(e.reduced_rank());
    return {0, {delta.a() / n, delta.b() / n}};
}

IndecClass apply_twist(const CurveSpec& c, std::int64_t rank, std::int64_t degree,
                       const PicClass& line) {
    if (line.degree != 0) throw InputError("twists must have degree 0");
    const auto base = atiyah_F(c, rank, degree);
    const auto shift = scalar_mul(base.reduced_rank(), line.u);
    return {rank, degree, {base.stable_det().degree, add(base.stable_det().u, shift)}};
}

ModuliPoint include_in_moduli(const IndecClass& e) {
    return {e.rank(), e.degree(), std::vector<PicClass>(static_cast<std::size_t>(e.h()), e.stable_det())};
}

IndecClass dual_indec(const IndecClass& e) {
    return {e.rank(), -e.degree(), pic_dual(e.stable_det())};
}

IndecClass sigma_indec(const CurveSpec& c, const IndecClass& e) {
    return {e.rank(), e.degree(), sigma_pic(c, e.stable_det())};
}

bool is_self_conjugate(const CurveSpec& c, const IndecClass& e) {
    return sigma_pic(c, e.stable_det()) == e.stable_det();
}

ModularTag real_or_quaternionic(const CurveSpec& c, const IndecClass& e) {
    if (!is_self_conjugate(c, e)) throw InputError("indecomposable class is not self-conjugate");
    // F_h is canonically real, so E' (x) F_h carries the structure type of E'.
    return pic_fixed_tag(c, e.stable_det());
}

std::int64_t euler_char(std::int64_t rank, std::int64_t degree, std::int64_t genus) {
    return degree + rank * (1 - genus);
}

AtiyahExtensionCert atiyah_extension_cert(std::int64_t h) {
    if (h < 2) throw InputError("the extension step exists for h >= 2 only");
    AtiyahExtensionCert cert;
    cert.h = h;
    // F_{h-1}^* = F_{h-1}: rank h-1, degree 0, one-dimensional H^0.
    cert.euler_char_of_dual_step = euler_char(h - 1, 0, 1);
    cert.h0 = 1;
    cert.h1 = cert.h0 - cert.euler_char_of_dual_step;
    return cert;
}

IndecRealLocusReport indec_real_locus(const CurveSpec& c, std::int64_t rank, std::int64_t degree) {
    IndecRealLocusReport report;
    report.rank = rank;
    report.degree = degree;
    report.h = moduli_h(rank, degree);
    report.reduced_rank = rank / report.h;
    report.reduced_degree = degree / report.h;
    auto pic = pic_real_locus(c, report.reduced_degree);
    report.iso_target = pic.iso_target;
    report.components = std::move(pic.components);
    return report;
}

}  // namespace rebc
