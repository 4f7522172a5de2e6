#include <algorithm>
#include <set>

#include "doctest.h"
#include "rebc/oracle.hpp"
#include "test_support.hpp"

using namespace rebc;
using namespace rebc::oracle;
using rebc::test::pt;

namespace {

// Direct evaluation of the fixed set without the kernels: test every grid
// point against the exact library action.
std::vector<TorusPoint> exact_fixed(const CurveSpec& c, std::int64_t degree, std::int64_t n) {
    std::vector<TorusPoint> out;
    for (const auto& p : torsion_points(n)) {
        if (sigma_pic(c, PicClass{degree, p}) == PicClass{degree, p}) out.push_back(p);
    }
    return out;
}

}  // namespace

TEST_CASE("grid validation") {
    CHECK_THROWS_AS(GridSpec{7}.validate(), InputError);
    CHECK_THROWS_AS(GridSpec{0}.validate(), InputError);
    CHECK_NOTHROW(GridSpec{2}.validate());
    const auto c = test::curve(CurveKind::TwoComponents);
    CHECK_THROWS_AS(fixed_points_on_grid(c, NamedInvolution::sigma_point(), GridSpec{13}), InputError);
}

TEST_CASE("fixed point examples") {
    const auto none = test::curve(CurveKind::NoRealPoints);
    CHECK(fixed_points_on_grid(none, NamedInvolution::sigma_point(), GridSpec{12}).empty());

    const auto pts = fixed_grid_points(none, NamedInvolution::sigma_pic(0), GridSpec{12});
    CHECK(pts.size() == 24);
    const auto comps = grid_components(pts, GridSpec{12});
    REQUIRE(comps.size() == 2);
    CHECK(comps[0].points.size() == 12);
    CHECK(comps[1].points.size() == 12);
    CHECK(comps[0].is_circle);
    CHECK(comps[1].is_circle);

    const auto two = test::curve(CurveKind::TwoComponents);
    const auto pairs = fixed_points_on_grid(two, NamedInvolution::sigma_moduli(2, 0), GridSpec{6});
    const auto p = pt(1, 6, 1, 3);
    GridElement mixed{p, sigma_point(two, p)};
    std::sort(mixed.begin(), mixed.end());
    CHECK(std::find(pairs.begin(), pairs.end(), mixed) != pairs.end());
    CHECK(std::is_sorted(pairs.begin(), pairs.end()));
}

TEST_CASE("component counting") {
    const GridSpec g{12};
    CHECK(grid_component_count({}, g) == 0);
    std::vector<TorusPoint> circle, two_circles;
    for (std::int64_t i = 0; i < 12; ++i) {
        circle.emplace_back(Frac(i, 12), Frac(0));
        two_circles.emplace_back(Frac(i, 12), Frac(0));
        two_circles.emplace_back(Frac(i, 12), Frac(1, 2));
    }
    CHECK(grid_component_count(circle, g) == 1);
    CHECK(grid_component_count(two_circles, g) == 2);
    CHECK(grid_components(circle, g)[0].is_circle);
    circle.pop_back();
    CHECK_FALSE(grid_components(circle, g)[0].is_circle);
    CHECK_THROWS_AS(grid_component_count({pt(1, 5, 0, 1)}, g), InputError);
}

TEST_CASE("kernel-based fixed sets equal exact evaluation") {
    for (const auto kind : test::kAllKinds) {
        const auto c = test::curve(kind);
        for (std::int64_t d = -4; d <= 4; ++d) {
            for (const std::int64_t n : {4, 12, 60}) {
                CHECK(fixed_grid_points(c, NamedInvolution::sigma_pic(d), GridSpec{n}) == exact_fixed(c, d, n));
            }
        }
        for (const std::int64_t n : {4, 12}) {
            std::vector<TorusPoint> eta;
            for (const auto& p : torsion_points(n)) {
                if (eta_line(c, PicClass{0, p}) == PicClass{0, p}) eta.push_back(p);
            }
            CHECK(fixed_grid_points(c, NamedInvolution::eta_line(), GridSpec{n}) == eta);
        }
    }
}

TEST_CASE("oracle counts are independent of N") {
    for (const auto kind : test::kAllKinds) {
        const auto c = test::curve(kind);
        for (std::int64_t d = -4; d <= 4; ++d) {
            std::set<std::int64_t> counts;
            for (const std::int64_t n : {4, 12, 60}) {
                const GridSpec g{n};
                const auto comps = grid_components(fixed_grid_points(c, NamedInvolution::sigma_pic(d), g), g);
                counts.insert(static_cast<std::int64_t>(comps.size()));
                for (const auto& k : comps) CHECK(k.is_circle);
            }
            CHECK(counts.size() == 1);
            CHECK(*counts.begin() == static_cast<std::int64_t>(pic_real_locus(c, d).components.size()));
        }
        std::set<std::int64_t> eta_counts;
        for (const std::int64_t n : {4, 12, 60}) {
            const GridSpec g{n};
            const auto comps = grid_components(fixed_grid_points(c, NamedInvolution::eta_line(), g), g);
            for (const auto& k : comps) CHECK(k.is_circle);
            eta_counts.insert(static_cast<std::int64_t>(comps.size()));
        }
        CHECK(eta_counts.size() == 1);
    }
}

TEST_CASE("symmetric-square count of eta") {
    // A fixed unordered pair is either two fixed points or an orbit {p, eta(p)}
    // of size 2: f(f+1)/2 + (|G| - f)/2.
    for (const auto kind : test::kAllKinds) {
        const auto c = test::curve(kind);
        const GridSpec g{6};
        const auto f = static_cast<std::int64_t>(fixed_grid_points(c, NamedInvolution::eta_line(), g).size());
        const auto fixed = fixed_points_on_grid(c, NamedInvolution::eta_moduli(2), g);
        CHECK(static_cast<std::int64_t>(fixed.size()) == f * (f + 1) / 2 + (36 - f) / 2);
        for (const auto& e : fixed) {
            const auto m = moduli_point(2, 0, {PicClass{0, e[0]}, PicClass{0, e[1]}});
            CHECK(eta_moduli(c, m) == m);
        }
    }
    const auto two = test::curve(CurveKind::TwoComponents);
    CHECK(fixed_points_on_grid(two, NamedInvolution::eta_moduli(2), GridSpec{6}).size() == 90);
}

TEST_CASE("Sym^h enumeration agrees with a direct scan of multisets") {
    const GridSpec g{4};
    const auto grid = torsion_points(4);
    for (const auto kind : test::kAllKinds) {
        const auto c = test::curve(kind);
        for (const auto& [r, d] : std::vector<std::pair<std::int64_t, std::int64_t>>{{2, 0}, {4, 2}, {3, 3}}) {
            const auto h = moduli_h(r, d);
            std::vector<GridElement> expected;
            for (auto& e : enumerate_multisets(grid, h)) {
                std::vector<PicClass> dets;
                for (const auto& p : e) dets.push_back({d / h, p});
                const ModuliPoint m(r, d, dets);
                if (sigma_moduli(c, m) == m) expected.push_back(std::move(e));
            }
            CHECK(fixed_points_on_grid(c, NamedInvolution::sigma_moduli(r, d), g) == expected);
        }
    }
}

TEST_CASE("multiset enumeration") {
    const std::vector<TorusPoint> pts{pt(0, 1, 0, 1), pt(1, 2, 0, 1), pt(0, 1, 1, 2)};
    CHECK(enumerate_multisets(pts, 1).size() == 3);
    CHECK(enumerate_multisets(pts, 2).size() == 6);
    CHECK(enumerate_multisets(pts, 3).size() == 10);
    CHECK(enumerate_multisets({}, 2).empty());
    CHECK_THROWS_AS(enumerate_multisets(pts, 0), InputError);
    CHECK_THROWS_AS(fixed_points_on_grid(test::curve(CurveKind::TwoComponents), NamedInvolution::sigma_moduli(4, 0),
                                         GridSpec{60}),
                    InputError);
}

TEST_CASE("results do not depend on the thread count") {
    const auto c = test::curve(CurveKind::OneComponent);
    for (const unsigned threads : {2u, 3u, 8u}) {
        CHECK(fixed_points_on_grid(c, NamedInvolution::sigma_pic(3), GridSpec{60, threads}) ==
              fixed_points_on_grid(c, NamedInvolution::sigma_pic(3), GridSpec{60, 1}));
        CHECK(fixed_points_on_grid(c, NamedInvolution::eta_moduli(2), GridSpec{8, threads}) ==
              fixed_points_on_grid(c, NamedInvolution::eta_moduli(2), GridSpec{8, 1}));
    }
}

TEST_CASE("naming") {
    CHECK(NamedInvolution::sigma_moduli(4, 2).multiset_size() == 2);
    CHECK(NamedInvolution::eta_moduli(3).multiset_size() == 3);
    CHECK(NamedInvolution::sigma_pic(5).name() == "sigma_pic(5)");
    CHECK_THROWS_AS(fixed_grid_points(test::curve(CurveKind::TwoComponents), NamedInvolution::eta_moduli(2),
                                      GridSpec{4}),
                    InputError);
}
