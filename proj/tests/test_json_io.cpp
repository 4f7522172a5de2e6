#include "doctest.h"
#include "rebc/json_io.hpp"
#include "test_support.hpp"

using namespace rebc;
using rebc::io::json;
using rebc::test::pt;

TEST_CASE("fractions use canonical strings") {
    CHECK(io::encode(Frac(6, 4)) == json("3/2"));
    CHECK(io::encode(Frac(0)) == json("0"));
    CHECK(io::decode_frac(json("4/6")) == Frac(2, 3));
    CHECK(io::decode_frac(json(5)) == Frac(5));
    CHECK_THROWS_AS(io::decode_frac(json(0.5)), InputError);
    CHECK_THROWS_AS(io::decode_frac(json("1/0")), InputError);
}

TEST_CASE("curve round trip and defaults") {
    const CurveSpec c(CurveKind::OneComponent, Frac(3, 2), pt(1, 3, 1, 4));
    const auto j = io::encode(c);
    CHECK(j.dump() == R"({"basepoint":{"a":"1/3","b":"1/4"},"kind":"one_component","y":"3/2"})");
    CHECK(io::decode_curve(j) == c);
    const auto d = io::decode_curve(json::parse(R"({"kind":"no_real_points"})"));
    CHECK(d.kind == CurveKind::NoRealPoints);
    CHECK(d.y == Frac(1));
    CHECK(d.basepoint.is_zero());
    CHECK_THROWS_AS(io::decode_curve(json::parse(R"({"kind":"none"})")), InputError);
    CHECK_THROWS_AS(io::decode_curve(json::parse(R"({"kind":"two_components","y":"-1"})")), InputError);
    CHECK_THROWS_AS(io::decode_curve(json::parse(R"({"y":"1"})")), InputError);
    CHECK_THROWS_AS(io::decode_curve(json::parse(R"([1,2])")), InputError);
}

TEST_CASE("pic, moduli, indecomposable and bundle round trips") {
    const PicClass l{2, pt(1, 2, 0, 1)};
    CHECK(io::encode(l).dump() == R"({"degree":2,"u":{"a":"1/2","b":"0"}})");
    CHECK(io::decode_pic(io::encode(l)) == l);
    const auto m = moduli_point(2, 0, {PicClass{0, pt(1, 3, 0, 1)}, trivial_class()});
    CHECK(io::decode_moduli(io::encode(m)) == m);
    const IndecClass e(6, 3, PicClass{1, pt(1, 5, 2, 5)});
    CHECK(io::decode_indec(io::encode(e)) == e);
    const FormalBundle b({e, atiyah_F0(2)});
    CHECK(io::decode_bundle(io::encode(b)) == b);
    CHECK_THROWS_AS(io::decode_pic(json::parse(R"({"degree":"2","u":{"a":"0","b":"0"}})")), InputError);
    CHECK_THROWS_AS(io::decode_moduli(json::parse(R"({"rank":2,"degree":0,"dets":[]})")), InputError);
    CHECK_THROWS_AS(io::decode_indec(json::parse(R"({"rank":4,"degree":2,"stable_det":{"degree":2,"u":{"a":"0","b":"0"}}})")),
                    InputError);
    CHECK_THROWS_AS(io::decode_bundle(json::parse(R"({"summands":[]})")), InputError);
    CHECK_THROWS_AS(io::decode_bundle(json::parse(R"({"summands":{}})")), InputError);
}

TEST_CASE("report encodings") {
    const auto none = test::curve(CurveKind::NoRealPoints);
    const auto partial = io::encode(moduli_real_locus(none, 4, 2));
    CHECK(partial["analysis"] == "partial");
    CHECK(partial["component_count"].is_null());
    CHECK(partial["strata"]["mixed_pairs"] == true);
    const auto complete = io::encode(moduli_real_locus(none, 3, 2));
    CHECK(complete["analysis"] == "complete");
    CHECK(complete["component_count"] == 2);
    CHECK(complete["components"][1]["tag"] == "quaternionic");
    CHECK(io::encode(pic_real_locus(none, 0))["iso_target"] == "Pic0");
}

TEST_CASE("parse maps errors to InputError") {
    CHECK(io::parse(R"({"a":1})")["a"] == 1);
    CHECK_THROWS_AS(io::parse("{"), InputError);
}
