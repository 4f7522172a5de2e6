#pragma once

// JSON wire format. Fractions travel as strings in lowest terms ("3/2",
// "0"); decoders also accept plain integers. Every decoder throws
// InputError on a schema violation.

#include "json.hpp"

#include "rebc/bundle_algebra.hpp"
#include "rebc/topotypes.hpp"

namespace rebc::io {

using nlohmann::json;

json encode(const Frac& q);
json encode(const TorusPoint& p);
json encode(const CurveSpec& c);
json encode(const ComponentDescriptor& k);
json encode(const PicClass& l);
json encode(const ModuliPoint& m);
json encode(const IndecClass& e);
json encode(const FormalBundle& b);
json encode(const PicRealLocusReport& r);
json encode(const ModuliRealLocusReport& r);
json encode(const IndecRealLocusReport& r);
json encode(const GenusOneTable& t);
json encode(const HigherGenusCount& t);
json encode(const TopoTypeReal& t);
json encode(const AtiyahExtensionCert& cert);

Frac decode_frac(const json& j);
TorusPoint decode_point(const json& j);
CurveSpec decode_curve(const json& j);
PicClass decode_pic(const json& j);
ModuliPoint decode_moduli(const json& j);
IndecClass decode_indec(const json& j);
FormalBundle decode_bundle(const json& j);

/// Parses text as JSON, mapping parse errors to InputError.
json parse(std::string_view text);

}  // namespace rebc::io
