#include "rebc/commands.hpp"

#include <sstream>

#include "rebc/oracle.hpp"

namespace rebc::cli {

namespace {

json envelope(const std::string& command, const CurveSpec& curve, json parameters, json result) {
    return {{"schema_version", kSchemaVersion},
            {"command", command},
            {"curve", io::encode(curve)},
            {"parameters", std::move(parameters)},
            {"result", std::move(result)}};
}

struct OracleCount {
    std::int64_t count = 0;
    bool all_circles = true;
};

OracleCount oracle_count(const CurveSpec& curve, const oracle::NamedInvolution& inv, const CommandOptions& opts) {
    const oracle::GridSpec grid{*opts.verify_grid, opts.threads};
    const auto fixed = oracle::fixed_grid_points(curve, inv, grid);
    const auto comps = oracle::grid_components(fixed, grid);
    OracleCount out;
    out.count = static_cast<std::int64_t>(comps.size());
    for (const auto& k : comps) out.all_circles = out.all_circles && k.is_circle;
    return out;
}

json count_block(const OracleCount& found, std::size_t expected) {
    return {{"oracle_count", found.count},
            {"reported_count", expected},
            {"all_circles", found.all_circles},
            {"match", found.count == static_cast<std::int64_t>(expected) && found.all_circles}};
}

std::int64_t get_int(const json& j, const char* key) {
    if (!j.contains(key) || !j.at(key).is_number_integer()) {
        throw InputError(std::string("request field '") + key + "' must be an integer");
    }
    return j.at(key).get<std::int64_t>();
}

std::optional<std::int64_t> get_opt_int(const json& j, const char* key) {
    if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
    return get_int(j, key);
}

}  // namespace

json cmd_classify(const CurveSpec& curve, std::int64_t rank, std::int64_t degree, const CommandOptions& opts) {
    const auto h = moduli_h(rank, degree);
    const auto locus = moduli_real_locus(curve, rank, degree);
    const auto indec = indec_real_locus(curve, rank, degree);

    json fixed_det = {{"fiber_dimension", fixed_det_fiber_dim(rank, degree)}};
    if (curve.kind != CurveKind::NoRealPoints) {
        fixed_det["real_model"] = "P^" + std::to_string(h - 1) + "_R";
    } else {
        fixed_det["real_model"] = nullptr;
    }

    json result = {{"h", h},
                   {"reduced_rank", rank / h},
                   {"reduced_degree", degree / h},
                   {"moduli", {{"iso_target", to_string(locus.iso_target)}, {"dimension", h}}},
                   {"real_locus", io::encode(locus)},
                   {"indecomposable_locus", io::encode(indec)},
                   {"fixed_determinant", std::move(fixed_det)}};

    auto report = envelope("classify", curve, {{"rank", rank}, {"degree", degree}}, std::move(result));
    if (opts.verify_grid) {
        json verification = {{"grid", *opts.verify_grid}};
        bool match = true;
        if (h == 1) {
            const auto found = oracle_count(curve, oracle::NamedInvolution::sigma_moduli(rank, degree), opts);
            verification["real_locus"] = count_block(found, locus.components.size());
            match = match && verification["real_locus"]["match"].get<bool>();
        } else {
            verification["real_locus"] = "skipped: partial analysis for h > 1";
        }
        const auto found = oracle_count(curve, oracle::NamedInvolution::sigma_pic(degree / h), opts);
        verification["indecomposable_locus"] = count_block(found, indec.components.size());
        match = match && verification["indecomposable_locus"]["match"].get<bool>();
        verification["match"] = match;
        report["verification"] = std::move(verification);
    }
    return report;
}

json cmd_picard(const CurveSpec& curve, std::int64_t degree, const CommandOptions& opts) {
    const auto locus = pic_real_locus(curve, degree);
    auto report = envelope("picard", curve, {{"degree", degree}}, io::encode(locus));
    if (opts.verify_grid) {
        const auto found = oracle_count(curve, oracle::NamedInvolution::sigma_pic(degree), opts);
        auto block = count_block(found, locus.components.size());
        block["grid"] = *opts.verify_grid;
        report["verification"] = std::move(block);
    }
    return report;
}

json cmd_topo(const CurveSpec& curve, std::int64_t rank, std::int64_t degree, std::int64_t genus,
              std::optional<int> real_circles) {
    json params = {{"rank", rank}, {"degree", degree}, {"genus", genus}};
    json result;
    if (genus >= 2) {
        const int n = real_circles.value_or(real_component_count(curve.kind));
        params["real_circles"] = n;
        result["quaternionic_exists"] = quaternionic_exists(n, rank, degree, genus);
        result["higher_genus"] = io::encode(component_count_higher_genus(n, genus, rank, degree));
    } else {
        if (genus != 1) throw InputError("genus must be 1 or at least 2");
        if (real_circles && *real_circles != real_component_count(curve.kind)) {
            throw InputError("at genus 1 the number of real circles is fixed by the curve kind");
        }
        const auto types = enumerate_real_types(curve, rank, degree);
        json list = json::array();
        for (const auto& t : types) list.push_back(io::encode(t));
        result["real_types"] = std::move(list);
        result["real_type_count"] = types.size();
        result["quaternionic_exists"] = quaternionic_exists(curve, rank, degree, genus);
        result["genus1_table"] = io::encode(component_table_genus1(curve, rank, degree));
    }
    return envelope("topo", curve, std::move(params), std::move(result));
}

json cmd_algebra(const CurveSpec& curve, const FormalBundle& bundle, const std::string& op,
                 const std::optional<FormalBundle>& other, const std::optional<PicClass>& line) {
    json params = {{"op", op}, {"bundle", io::encode(bundle)}};
    json result;
    if (op == "normal-form") {
        result["bundle"] = io::encode(normal_form(bundle));
    } else if (op == "slope") {
        result["slope"] = io::encode(slope(bundle));
        result["rank"] = bundle.rank();
        result["degree"] = bundle.degree();
    } else if (op == "semistable") {
        result["semistable"] = is_semistable(bundle);
        result["stable"] = is_stable(bundle);
    } else if (op == "polystable") {
        result["polystable"] = is_polystable(bundle);
    } else if (op == "gr") {
        result["gr"] = io::encode(gr(bundle));
    } else if (op == "s-equiv") {
        if (!other) throw InputError("s-equiv needs a second bundle");
        params["other"] = io::encode(*other);
        result["s_equivalent"] = s_equivalent(bundle, *other);
    } else if (op == "dual") {
        result["bundle"] = io::encode(dual(bundle));
    } else if (op == "twist") {
        if (!line) throw InputError("twist needs a degree-0 line bundle");
        params["line"] = io::encode(*line);
        result["bundle"] = io::encode(twist(bundle, *line));
    } else {
        throw InputError("unknown algebra op '" + op + "'");
    }
    return envelope("algebra", curve, std::move(params), std::move(result));
}

json cmd_indec(const CurveSpec& curve, std::int64_t rank, std::int64_t degree,
               const std::optional<PicClass>& twist, const CommandOptions& opts) {
    json params = {{"rank", rank}, {"degree", degree}};
    const auto base = atiyah_F(curve, rank, degree);
    const IndecClass e = twist ? apply_twist(curve, rank, degree, *twist) : base;
    if (twist) params["twist"] = io::encode(*twist);

    json result = {{"atiyah_bundle", io::encode(base)},
                   {"class", io::encode(e)},
                   {"stable_factor", io::encode(stable_factor(e))},
                   {"in_moduli", io::encode(include_in_moduli(e))},
                   {"twist_representative", io::encode(classify_twist(curve, e))},
                   {"twist_fiber_size", twist_fiber(curve, e).size()},
                   {"self_conjugate", is_self_conjugate(curve, e)},
                   {"dual", io::encode(dual_indec(e))},
                   {"locus", io::encode(indec_real_locus(curve, rank, degree))}};
    if (is_self_conjugate(curve, e)) {
        result["structure"] = to_string(real_or_quaternionic(curve, e));
    } else {
        result["structure"] = nullptr;
    }
    if (e.h() >= 2) result["extension_cert"] = io::encode(atiyah_extension_cert(e.h()));

    auto report = envelope("indec", curve, std::move(params), std::move(result));
    if (opts.verify_grid) {
        const auto found = oracle_count(curve, oracle::NamedInvolution::sigma_pic(e.reduced_degree()), opts);
        auto block = count_block(found, indec_real_locus(curve, rank, degree).components.size());
        block["grid"] = *opts.verify_grid;
        report["verification"] = std::move(block);
    }
    return report;
}

json run_request(const json& request, const CommandOptions& base_opts) {
    if (!request.is_object()) throw InputError("a request must be a JSON object");
    if (!request.contains("command") || !request.at("command").is_string()) {
        throw InputError("request field 'command' must be a string");
    }
    if (!request.contains("curve")) throw InputError("request field 'curve' is required");
    const auto command = request.at("command").get<std::string>();
    const auto curve = io::decode_curve(request.at("curve"));
    CommandOptions opts = base_opts;
    if (auto n = get_opt_int(request, "verify")) opts.verify_grid = n;

    if (command == "classify") return cmd_classify(curve, get_int(request, "rank"), get_int(request, "degree"), opts);
    if (command == "picard") return cmd_picard(curve, get_int(request, "degree"), opts);
    if (command == "topo") {
        const auto genus = get_opt_int(request, "genus").value_or(1);
        std::optional<int> n;
        if (auto v = get_opt_int(request, "real_circles")) n = static_cast<int>(*v);
        return cmd_topo(curve, get_int(request, "rank"), get_int(request, "degree"), genus, n);
    }
    if (command == "algebra") {
        if (!request.contains("bundle")) throw InputError("request field 'bundle' is required");
        if (!request.contains("op") || !request.at("op").is_string()) {
            throw InputError("request field 'op' must be a string");
        }
        std::optional<FormalBundle> other;
        std::optional<PicClass> line;
        if (request.contains("other")) other = io::decode_bundle(request.at("other"));
        if (request.contains("line")) line = io::decode_pic(request.at("line"));
        return cmd_algebra(curve, io::decode_bundle(request.at("bundle")), request.at("op").get<std::string>(),
                           other, line);
    }
    if (command == "indec") {
        std::optional<PicClass> twist;
        if (request.contains("twist")) twist = io::decode_pic(request.at("twist"));
        return cmd_indec(curve, get_int(request, "rank"), get_int(request, "degree"), twist, opts);
    }
    throw InputError("unknown command '" + command + "'");
}

bool verification_ok(const json& report) {
    const auto it = report.find("verification");
    if (it == report.end()) return true;
    return it->value("match", true);
}

namespace {

void render(const json& j, const std::string& path, std::ostringstream& out) {
    if (j.is_object()) {
        for (const auto& [key, value] : j.items()) render(value, path.empty() ? key : path + "." + key, out);
    } else if (j.is_array()) {
        if (j.empty()) out << path << ": []\n";
        for (std::size_t k = 0; k < j.size(); ++k) render(j[k], path + "[" + std::to_string(k) + "]", out);
    } else if (j.is_string()) {
        out << path << ": " << j.get<std::string>() << "\n";
    } else {
        out << path << ": " << j.dump() << "\n";
    }
}

}  // namespace

std::string render_text(const json& report) {
    std::ostringstream out;
    render(report, "", out);
    return out.str();
}

}  // namespace rebc::cli
