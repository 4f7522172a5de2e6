#include "rebc/json_io.hpp"

namespace rebc::io {

namespace {

const json& field(const json& j, const char* key) {
    if (!j.is_object()) throw InputError(std::string("expected an object with field '") + key + "'");
    const auto it = j.find(key);
    if (it == j.end()) throw InputError(std::string("missing field '") + key + "'");
    return *it;
}

std::int64_t decode_int(const json& j, const char* what) {
    if (!j.is_number_integer()) throw InputError(std::string("field '") + what + "' must be an integer");
    return j.get<std::int64_t>();
}

json encode_tag(ModularTag tag) { return to_string(tag); }

}  // namespace

json encode(const Frac& q) { return to_string(q); }

json encode(const TorusPoint& p) { return {{"a", encode(p.a())}, {"b", encode(p.b())}}; }

json encode(const CurveSpec& c) {
    return {{"kind", to_string(c.kind)}, {"y", encode(c.y)}, {"basepoint", encode(c.basepoint)}};
}

json encode(const ComponentDescriptor& k) {
    return {{"label", k.label}, {"b", encode(k.b)}, {"free_coordinate", k.free_coordinate}};
}

json encode(const PicClass& l) { return {{"degree", l.degree}, {"u", encode(l.u)}}; }

json encode(const ModuliPoint& m) {
    json dets = json::array();
    for (const auto& l : m.dets()) dets.push_back(encode(l));
    return {{"rank", m.rank()}, {"degree", m.degree()}, {"dets", std::move(dets)}};
}

json encode(const IndecClass& e) {
    return {{"rank", e.rank()}, {"degree", e.degree()}, {"stable_det", encode(e.stable_det())}};
}

json encode(const FormalBundle& b) {
    json summands = json::array();
    for (const auto& e : b.summands()) summands.push_back(encode(e));
    return {{"summands", std::move(summands)}};
}

json encode(const PicRealLocusReport& r) {
    json comps = json::array();
    for (const auto& k : r.components) {
        comps.push_back({{"label", k.circle.label}, {"circle", encode(k.circle)}, {"tag", encode_tag(k.tag)},
                         {"diffeo_type", "circle"}});
    }
    return {{"degree", r.degree},
            {"iso_target", to_string(r.iso_target)},
            {"component_count", r.components.size()},
            {"components", std::move(comps)}};
}

json encode(const ModuliRealLocusReport& r) {
    json comps = json::array();
    for (const auto& k : r.components) {
        comps.push_back({{"label", k.label}, {"circle", encode(k.circle)}, {"tag", to_string(k.tag)},
                         {"diffeo_type", k.diffeo_type}});
    }
    json out = {{"rank", r.rank},
                {"degree", r.degree},
                {"h", r.h},
                {"iso_target", to_string(r.iso_target)},
                {"analysis", r.complete ? "complete" : "partial"},
                {"empty", r.empty},
                {"components", std::move(comps)}};
    if (r.complete) {
        out["component_count"] = r.components.size();
    } else {
        out["component_count"] = nullptr;
        out["strata"] = {{"individually_fixed", r.has_individually_fixed_stratum},
                         {"mixed_pairs", r.has_mixed_pair_stratum},
                         {"tag", to_string(FixedPointTag::UnclassifiedSemistable)}};
    }
    return out;
}

json encode(const IndecRealLocusReport& r) {
    json comps = json::array();
    for (const auto& k : r.components) {
        comps.push_back({{"label", k.circle.label}, {"circle", encode(k.circle)}, {"tag", encode_tag(k.tag)},
                         {"diffeo_type", "circle"}});
    }
    return {{"rank", r.rank},
            {"degree", r.degree},
            {"h", r.h},
            {"reduced_rank", r.reduced_rank},
            {"reduced_degree", r.reduced_degree},
            {"iso_target", to_string(r.iso_target)},
            {"component_count", r.components.size()},
            {"components", std::move(comps)}};
}

json encode(const GenusOneTable& t) {
    json comps = json::array();
    for (const auto& k : t.components) {
        comps.push_back({{"label", k.label}, {"tag", encode_tag(k.tag)}, {"diffeo_type", k.diffeo_type}});
    }
    return {{"rank", t.rank},
            {"degree", t.degree},
            {"h", t.h},
            {"reduced_degree", t.reduced_degree},
            {"iso_target", to_string(t.iso_target)},
            {"component_count", t.components.size()},
            {"components", std::move(comps)},
            {"sym_h_caveat", t.sym_h_caveat}};
}

json encode(const HigherGenusCount& t) {
    json tags = json::array();
    for (const auto tag : t.tags) tags.push_back(encode_tag(tag));
    return {{"count", t.count}, {"tags", std::move(tags)}, {"w1", t.w1}};
}

json encode(const TopoTypeReal& t) { return {{"rank", t.rank}, {"degree", t.degree}, {"w1", t.w1}}; }

json encode(const AtiyahExtensionCert& cert) {
    return {{"h", cert.h}, {"euler_char_of_dual_step", cert.euler_char_of_dual_step}, {"h0", cert.h0}, {"h1", cert.h1}};
}

Frac decode_frac(const json& j) {
    if (j.is_number_integer()) return Frac(j.get<std::int64_t>());
    if (j.is_string()) return parse_frac(j.get<std::string>());
    throw InputError("a fraction must be a string \"p/q\" or an integer");
}

TorusPoint decode_point(const json& j) { return {decode_frac(field(j, "a")), decode_frac(field(j, "b"))}; }

CurveSpec decode_curve(const json& j) {
    const auto& kind = field(j, "kind");
    if (!kind.is_string()) throw InputError("field 'kind' must be a string");
    const Frac y = j.contains("y") ? decode_frac(j.at("y")) : Frac(1);
    const TorusPoint base = j.contains("basepoint") ? decode_point(j.at("basepoint")) : TorusPoint{};
    return {parse_curve_kind(kind.get<std::string>()), y, base};
}

PicClass decode_pic(const json& j) {
    return {decode_int(field(j, "degree"), "degree"), decode_point(field(j, "u"))};
}

ModuliPoint decode_moduli(const json& j) {
    const auto& dets = field(j, "dets");
    if (!dets.is_array()) throw InputError("field 'dets' must be an array");
    std::vector<PicClass> lines;
    for (const auto& d : dets) lines.push_back(decode_pic(d));
    return {decode_int(field(j, "rank"), "rank"), decode_int(field(j, "degree"), "degree"), std::move(lines)};
}

IndecClass decode_indec(const json& j) {
    return {decode_int(field(j, "rank"), "rank"), decode_int(field(j, "degree"), "degree"),
            decode_pic(field(j, "stable_det"))};
}

FormalBundle decode_bundle(const json& j) {
    const auto& summands = field(j, "summands");
    if (!summands.is_array()) throw InputError("field 'summands' must be an array");
    std::vector<IndecClass> out;
    for (const auto& s : summands) out.push_back(decode_indec(s));
    return FormalBundle(std::move(out));
}

json parse(std::string_view text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError(std::string("invalid JSON: ") + e.what());
    }
}

}  // namespace rebc::io
