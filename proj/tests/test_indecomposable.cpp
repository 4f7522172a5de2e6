#include <algorithm>

#include "doctest.h"
#include "test_support.hpp"

using namespace rebc;
using rebc::test::pt;

TEST_CASE("IndecClass validation") {
    CHECK_NOTHROW(IndecClass(4, 2, PicClass{1, {}}));
    CHECK_THROWS_AS(IndecClass(4, 2, PicClass{2, {}}), InputError);
    CHECK_THROWS_AS(IndecClass(0, 2, PicClass{2, {}}), InputError);
    const IndecClass e(6, 4, PicClass{2, pt(1, 3, 0, 1)});
    CHECK(e.h() == 2);
    CHECK(e.reduced_rank() == 3);
    CHECK(e.reduced_degree() == 2);
}

TEST_CASE("Atiyah bundles F_h") {
    CHECK(atiyah_F0(1) == IndecClass(1, 0, trivial_class()));
    for (std::int64_t h = 1; h <= 6; ++h) {
        const auto f = atiyah_F0(h);
        CHECK(det_map(include_in_moduli(f)) == trivial_class());
        CHECK(dual_indec(f) == f);
        CHECK(include_in_moduli(f) ==
              moduli_point(h, 0, std::vector<PicClass>(static_cast<std::size_t>(h), trivial_class())));
        for (const auto kind : test::kAllKinds) {
            const auto c = test::curve(kind);
            CHECK(sigma_indec(c, f) == f);
            CHECK(real_or_quaternionic(c, f) == ModularTag::Real);
        }
    }
    CHECK_THROWS_AS(atiyah_F0(0), InputError);
}

TEST_CASE("atiyah_F") {
    const auto c = test::curve(CurveKind::TwoComponents);
    for (std::int64_t r = 1; r <= 6; ++r) CHECK(atiyah_F(c, r, 0) == atiyah_F0(r));
    const auto f21 = atiyah_F(c, 2, 1);
    CHECK(f21 == IndecClass(2, 1, PicClass{1, {}}));
    CHECK(det_map(include_in_moduli(f21)) == point_class(c.basepoint));
    CHECK(stable_factor(atiyah_F(c, 4, 2)) == stable_factor(atiyah_F(c, 2, 1)));

    const auto moved = test::curve(CurveKind::NoRealPoints, pt(1, 5, 2, 7));
    CHECK(atiyah_F(moved, 6, 9).stable_det() == PicClass{3, scalar_mul(3, pt(1, 5, 2, 7))});
    CHECK(stable_factor(atiyah_F(moved, 6, 9)) == stable_factor(atiyah_F(moved, 2, 3)));
}

TEST_CASE("stable factor bijection") {
    const auto x = pt(1, 3, 1, 6);
    const auto s = moduli_point(2, 1, {PicClass{1, x}});
    CHECK(indec_from_stable(s, 3) == IndecClass(6, 3, PicClass{1, x}));
    CHECK(indec_from_stable(s, 1) == IndecClass(2, 1, PicClass{1, x}));
    CHECK(include_in_moduli(indec_from_stable(s, 1)) == s);
    CHECK_THROWS_AS(indec_from_stable(moduli_point(2, 0, {trivial_class(), trivial_class()}), 2), InputError);
    CHECK_THROWS_AS(indec_from_stable(s, 0), InputError);

    for (const auto& [rp, dp] : std::vector<std::pair<std::int64_t, std::int64_t>>{{1, 0}, {2, 1}, {3, -2}, {1, 4}}) {
        for (const auto& u : torsion_points(6)) {
            const auto st = moduli_point(rp, dp, {PicClass{dp, u}});
            for (std::int64_t h = 1; h <= 4; ++h) {
                const auto e = indec_from_stable(st, h);
                CHECK(e.rank() == h * rp);
                CHECK(e.degree() == h * dp);
                CHECK(stable_factor(e) == st);
                CHECK(indec_from_stable(stable_factor(e), e.h()) == e);
            }
        }
    }
}

TEST_CASE("twist_equivalent") {
    const auto c = test::curve(CurveKind::OneComponent);
    const PicClass l{0, pt(1, 7, 2, 9)};
    CHECK(twist_equivalent(c, l, l, 3));
    CHECK(twist_equivalent(c, l, PicClass{0, add(l.u, pt(1, 3, 0, 1))}, 3));
    CHECK_FALSE(twist_equivalent(c, l, PicClass{0, add(l.u, pt(1, 2, 0, 1))}, 3));
    CHECK_THROWS_AS(twist_equivalent(c, l, PicClass{1, {}}, 3), InputError);

    // Equivalence classes on the 1/9-grid for r' = 3 all have 9 members.
    const auto grid = torsion_points(9);
    for (const auto& u : grid) {
        std::size_t members = 0;
        for (const auto& v : grid) {
            const bool eq = twist_equivalent(c, PicClass{0, u}, PicClass{0, v}, 3);
            CHECK(eq == twist_equivalent(c, PicClass{0, v}, PicClass{0, u}, 3));
            members += eq ? 1 : 0;
        }
        CHECK(members == 9);
    }
}

TEST_CASE("classify_twist and twist fibers") {
    test::Rng rng;
    const auto c = test::curve(CurveKind::TwoComponents, pt(1, 4, 1, 8));
    CHECK(classify_twist(c, atiyah_F(c, 4, 2)) == trivial_class());
    CHECK(twist_fiber(c, atiyah_F(c, 4, 2)).size() == 4);
    CHECK(twist_fiber(c, atiyah_F(c, 6, 3)).size() == 4);
    CHECK(twist_fiber(c, atiyah_F(c, 3, 1)).size() == 9);
    CHECK(twist_fiber(c, atiyah_F(c, 4, 4)).size() == 1);

    // Exhaustive preimage search on an aligned grid.
    for (const auto& [r, d] : std::vector<std::pair<std::int64_t, std::int64_t>>{{2, 1}, {3, 2}, {6, 2}, {4, 2}}) {
        const auto base = atiyah_F(c, r, d);
        const auto rp = base.reduced_rank();
        for (const auto& target : torsion_points(4)) {
            const IndecClass e(r, d, {base.stable_det().degree, add(base.stable_det().u, target)});
            std::vector<PicClass> found;
            for (const auto& u : torsion_points(4 * rp)) {
                if (apply_twist(c, r, d, PicClass{0, u}) == e) found.push_back({0, u});
            }
            CHECK(found.size() == static_cast<std::size_t>(rp * rp));
            CHECK(twist_fiber(c, e) == found);
            CHECK(classify_twist(c, e) == found.front());
        }
    }

    for (int trial = 0; trial < 300; ++trial) {
        const auto cur = rng.any_curve();
        const auto r = rng.integer(1, 6), d = rng.integer(-6, 6);
        const auto l = rng.pic(0);
        const auto e = apply_twist(cur, r, d, l);
        const auto rep = classify_twist(cur, e);
        CHECK(apply_twist(cur, r, d, rep) == e);
        CHECK(twist_equivalent(cur, rep, l, e.reduced_rank()));
        const auto fiber = twist_fiber(cur, e);
        CHECK(std::is_sorted(fiber.begin(), fiber.end()));
        CHECK(std::find(fiber.begin(), fiber.end(), rep) != fiber.end());
    }
    CHECK_THROWS_AS(apply_twist(c, 2, 1, PicClass{1, {}}), InputError);
}

TEST_CASE("include_in_moduli commutes with the determinant and with sigma") {
    test::Rng rng;
    for (int trial = 0; trial < 1000; ++trial) {
        const auto c = rng.any_curve();
        const auto r = rng.integer(1, 6), d = rng.integer(-6, 6);
        const auto h = moduli_h(r, d);
        const IndecClass e(r, d, rng.pic(d / h));
        CHECK(det_map(include_in_moduli(e)) == pic_power(e.stable_det(), h));
        CHECK(include_in_moduli(sigma_indec(c, e)) == sigma_moduli(c, include_in_moduli(e)));
        CHECK(dual_indec(dual_indec(e)) == e);
        CHECK(sigma_indec(c, sigma_indec(c, e)) == e);
        const bool sc = is_self_conjugate(c, e);
        CHECK(sc == (sigma_moduli(c, include_in_moduli(e)) == include_in_moduli(e)));
        if (!sc) CHECK_THROWS_AS(real_or_quaternionic(c, e), InputError);
    }
}

TEST_CASE("self-conjugate indecomposables") {
    const auto none = test::curve(CurveKind::NoRealPoints);
    for (const auto& u : torsion_points(12)) CHECK_FALSE(is_self_conjugate(none, IndecClass(3, 3, PicClass{1, u})));
    for (const auto& u : torsion_points(12)) CHECK_FALSE(is_self_conjugate(none, IndecClass(6, 9, PicClass{3, u})));
    const IndecClass q(3, 0, PicClass{0, pt(1, 5, 1, 2)});
    REQUIRE(is_self_conjugate(none, q));
    CHECK(real_or_quaternionic(none, q) == ModularTag::Quaternionic);
    const IndecClass r(3, 0, PicClass{0, pt(1, 5, 0, 1)});
    CHECK(real_or_quaternionic(none, r) == ModularTag::Real);
    const auto two = test::curve(CurveKind::TwoComponents);
    CHECK(real_or_quaternionic(two, IndecClass(4, 2, PicClass{1, pt(1, 5, 1, 2)})) == ModularTag::Real);
}

TEST_CASE("euler characteristic and extension numerology") {
    for (std::int64_t h = 2; h <= 8; ++h) {
        CHECK(euler_char(h - 1, 0, 1) == 0);
        const auto cert = atiyah_extension_cert(h);
        CHECK(cert.h == h);
        CHECK(cert.euler_char_of_dual_step == 0);
        CHECK(cert.h0 == 1);
        CHECK(cert.h1 == 1);
        CHECK(cert.h0 - cert.h1 == cert.euler_char_of_dual_step);
    }
    CHECK(euler_char(1, 0, 0) == 1);
    CHECK(euler_char(2, 3, 1) == 3);
    CHECK(euler_char(2, 3, 3) == -1);
    CHECK_THROWS_AS(atiyah_extension_cert(1), InputError);
}

TEST_CASE("indecomposable real locus follows the stable factor") {
    for (const auto kind : test::kAllKinds) {
        const auto c = test::curve(kind);
        for (const auto& [r, d] : std::vector<std::pair<std::int64_t, std::int64_t>>{
                 {2, 0}, {4, 2}, {6, 3}, {4, 6}, {6, 4}, {3, 1}}) {
            const auto report = indec_real_locus(c, r, d);
            const auto h = moduli_h(r, d);
            const auto stable = moduli_real_locus(c, r / h, d / h);
            REQUIRE(report.components.size() == stable.components.size());
            for (std::size_t k = 0; k < stable.components.size(); ++k) {
                CHECK(report.components[k].circle == stable.components[k].circle);
                const auto expected = stable.components[k].tag == FixedPointTag::Real ? ModularTag::Real
                                                                                       : ModularTag::Quaternionic;
                CHECK(report.components[k].tag == expected);
            }
        }
    }
}
