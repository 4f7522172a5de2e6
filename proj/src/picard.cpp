#include "rebc/picard.hpp"

#include <algorithm>

namespace rebc {

std::string to_string(ModularTag tag) {
    return tag == ModularTag::Real ? "real" : "quaternionic";
}

std::string to_string(RealIsoTarget target) {
    return target == RealIsoTarget::X ? "X" : "Pic0";
}

PicClass abel_jacobi(const CurveSpec&, std::span<const TorusPoint> points) {
    if (points.empty()) throw InputError("abel_jacobi needs a nonempty multiset");
    PicClass out{static_cast<std::int64_t>(points.size()), {}};
    for (const auto& p : points) out.u = add(out.u, p);
    return out;
}

PicClass abel_jacobi(const CurveSpec&,
                     std::span<const std::pair<TorusPoint, std::int64_t>> divisor) {
    PicClass out{};
    for (const auto& [p, n] : divisor) {
        out.degree += n;
        out.u = add(out.u, scalar_mul(n, p));
    }
    return out;
}

PicClass sigma_pic(const CurveSpec& c, const PicClass& line) {
    const auto moved = sigma_linear_part(c).apply(line.u);
    return {line.degree, add(moved, scalar_mul(line.degree, sigma_shift(c)))};
}

PicClass pic_tensor(const PicClass& l1, const PicClass& l2) {
    return {l1.degree + l2.degree, add(l1.u, l2.u)};
}

PicClass pic_dual(const PicClass& line) { return {-line.degree, neg(line.u)}; }

PicClass pic_power(const PicClass& line, std::int64_t n) {
    return {line.degree * n, scalar_mul(n, line.u)};
}

namespace {

ModularTag tag_for_circle(const CurveSpec& c, const ComponentDescriptor& circle) {
    if (c.kind != CurveKind::NoRealPoints) return ModularTag::Real;
    return circle.b == 0 ? ModularTag::Real : ModularTag::Quaternionic;
}

}  // namespace

PicRealLocusReport pic_real_locus(const CurveSpec& c, std::int64_t degree) {
    PicRealLocusReport report;
    report.degree = degree;
    const bool curve_has_real_points = c.kind != CurveKind::NoRealPoints;
    report.iso_target = (curve_has_real_points || degree % 2 != 0) ? RealIsoTarget::X
                                                                    : RealIsoTarget::Pic0;
    for (auto& circle : galois_fixed_circles(c, degree)) {
        const auto tag = tag_for_circle(c, circle);
        report.components.push_back({std::move(circle), tag});
    }
    return report;
}

ModularTag pic_fixed_tag(const CurveSpec& c, const PicClass& line) {
    if (sigma_pic(c, line) != line) throw InputError("line bundle class is not self-conjugate");
    const auto report = pic_real_locus(c, line.degree);
    const auto it = std::find_if(report.components.begin(), report.components.end(),
                                 [&](const PicRealComponent& k) { return k.circle.contains(line.u); });
    // Every fixed class lies on exactly one reported circle.
    if (it == report.components.end()) throw std::logic_error("fixed class off the real locus");
    return it->tag;
}

PicClass eta_line(const CurveSpec& c, const PicClass& line) {
    if (line.degree != 0) throw InputError("eta_line is defined on Pic^0 only");
    return pic_dual(sigma_pic(c, line));
}

}  // namespace rebc
