#include "rebc/torus.hpp"

namespace rebc {

std::string to_string(CurveKind kind) {
    switch (kind) {
        case CurveKind::TwoComponents: return "two_components";
        case CurveKind::OneComponent: return "one_component";
        case CurveKind::NoRealPoints: return "no_real_points";
    }
    return "unknown";
}

CurveKind parse_curve_kind(std::string_view text) {
    if (text == "two_components") return CurveKind::TwoComponents;
    if (text == "one_component") return CurveKind::OneComponent;
    if (text == "no_real_points") return CurveKind::NoRealPoints;
    throw InputError("unknown curve kind '" + std::string(text) + "'");
}

int real_component_count(CurveKind kind) {
    switch (kind) {
        case CurveKind::TwoComponents: return 2;
        case CurveKind::OneComponent: return 1;
        case CurveKind::NoRealPoints: return 0;
    }
    return 0;
}

std::strong_ordering operator<=>(const TorusPoint& p, const TorusPoint& q) {
    if (p.a_ != q.a_) return p.a_ < q.a_ ? std::strong_ordering::less : std::strong_ordering::greater;
    if (p.b_ != q.b_) return p.b_ < q.b_ ? std::strong_ordering::less : std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

TorusPoint add(const TorusPoint& p, const TorusPoint& q) { return {p.a() + q.a(), p.b() + q.b()}; }

TorusPoint neg(const TorusPoint& p) { return {-p.a(), -p.b()}; }

TorusPoint sub(const TorusPoint& p, const TorusPoint& q) { return add(p, neg(q)); }

TorusPoint scalar_mul(std::int64_t n, const TorusPoint& p) {
    return {p.a() * Frac(n), p.b() * Frac(n)};
}

CurveSpec::CurveSpec(CurveKind k, Frac y_, TorusPoint base) : kind(k), y(y_), basepoint(base) {
    if (y <= 0) throw InputError("lattice parameter y must be positive, got " + to_string(y));
}

Frac CurveSpec::tau_real_part() const {
    return kind == CurveKind::OneComponent ? Frac(1, 2) : Frac(0);
}

TorusPoint LatticeMatrix::apply(const TorusPoint& p) const {
    return {Frac(m00) * p.a() + Frac(m01) * p.b(), Frac(m10) * p.a() + Frac(m11) * p.b()};
}

LatticeMatrix sigma_linear_part(const CurveSpec& c) {
    const auto t = (c.tau_real_part() * Frac(2)).numerator();
    return {1, t, 0, -1};
}

TorusPoint sigma_shift(const CurveSpec& c) {
    return c.kind == CurveKind::NoRealPoints ? TorusPoint(Frac(1, 2), Frac(0)) : TorusPoint{};
}

TorusPoint sigma_point(const CurveSpec& c, const TorusPoint& p) {
    switch (c.kind) {
        case CurveKind::TwoComponents: return {p.a(), -p.b()};
        case CurveKind::OneComponent: return {p.a() + p.b(), -p.b()};
        case CurveKind::NoRealPoints: return {p.a() + Frac(1, 2), -p.b()};
    }
    return p;
}

ComponentDescriptor circle_at(const Frac& b) {
    return {"b=" + to_string(b), b, "a"};
}

std::vector<ComponentDescriptor> galois_fixed_circles(const CurveSpec& c, std::int64_t k) {
    const Frac t = c.tau_real_part() * Frac(2);
    const Frac s = sigma_shift(c).a();
    std::vector<ComponentDescriptor> out;
    for (const Frac b : {Frac(0), Frac(1, 2)}) {
        if (frac_part(t * b + Frac(k) * s) == 0) out.push_back(circle_at(b));
    }
    return out;
}

std::vector<ComponentDescriptor> real_locus_components(const CurveSpec& c) {
    return galois_fixed_circles(c, 1);
}

std::vector<TorusPoint> torsion_points(std::int64_t n) {
    if (n < 1) throw InputError("torsion order must be positive");
    std::vector<TorusPoint> out;
    out.reserve(static_cast<std::size_t>(n * n));
    for (std::int64_t i = 0; i < n; ++i) {
        for (std::int64_t j = 0; j < n; ++j) out.emplace_back(Frac(i, n), Frac(j, n));
    }
    return out;
}

}  // namespace rebc
