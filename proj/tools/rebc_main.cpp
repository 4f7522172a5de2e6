// rebc: command-line front end. Prints one JSON report on stdout.
// Exit codes: 0 ok, 2 input error, 3 verification mismatch.

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "rebc/commands.hpp"

namespace {

using rebc::cli::json;

constexpr int kExitInput = 2;
constexpr int kExitMismatch = 3;

std::string read_stream(std::istream& in) {
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

// "-" reads stdin, text starting with '{' or '[' is inline JSON, anything else is a path.
json load_json_arg(const std::string& arg, const char* what) {
    std::size_t first = arg.find_first_not_of(" \t\r\n");
    if (arg == "-") return rebc::io::parse(read_stream(std::cin));
    if (first != std::string::npos && (arg[first] == '{' || arg[first] == '[')) return rebc::io::parse(arg);
    std::ifstream file(arg);
    if (!file) throw rebc::InputError(std::string("cannot open ") + what + " file '" + arg + "'");
    return rebc::io::parse(read_stream(file));
}

std::int64_t parse_grid(const std::string& text, const char* what) {
    std::int64_t n = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), n);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
        throw rebc::InputError(std::string(what) + " must be an integer, got '" + text + "'");
    }
    return n;
}

std::int64_t default_grid() {
    const char* env = std::getenv("REBC_DEFAULT_GRID");
    if (env == nullptr || *env == '\0') return 60;
    return parse_grid(env, "REBC_DEFAULT_GRID");
}

struct Common {
    std::string curve = R"({"kind":"two_components"})";
    std::string format = "json";
    std::vector<std::string> verify;
    std::vector<CLI::Option*> verify_opts;  // one per subcommand
    unsigned threads = 1;
};

void add_common(CLI::App* sub, Common& c, bool with_verify) {
    sub->add_option("--curve", c.curve, "curve JSON: a file path, inline JSON, or - for stdin");
    sub->add_option("--format", c.format, "output format")->check(CLI::IsMember({"json", "text"}));
    if (with_verify) {
        c.verify_opts.push_back(sub->add_option("--verify", c.verify, "cross-check with the grid oracle at N (even)")
                                    ->expected(0, 1));
        sub->add_option("--threads", c.threads, "oracle worker threads")->check(CLI::PositiveNumber);
    }
}

rebc::cli::CommandOptions options_of(const Common& c) {
    rebc::cli::CommandOptions opts;
    opts.threads = c.threads;
    for (const auto* opt : c.verify_opts) {
        if (opt->count() == 0) continue;
        if (c.verify.empty() || c.verify.front().empty()) {
            opts.verify_grid = default_grid();
        } else {
            opts.verify_grid = parse_grid(c.verify.front(), "--verify");
        }
    }
    return opts;
}

void emit(const json& report, const std::string& format) {
    if (format == "text") {
        std::cout << rebc::cli::render_text(report);
    } else {
        std::cout << report.dump(2) << '\n';
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bundle classification on genus-one curves with a real structure"};
    app.require_subcommand(1);

    Common common;
    std::int64_t rank = 1;
    std::int64_t degree = 0;
    std::int64_t genus = 1;
    std::optional<int> real_circles;
    std::string bundle_arg, other_arg, line_arg, twist_arg, op, request_arg = "-";

    auto* classify = app.add_subcommand("classify", "moduli space and real-locus report for (r, d)");
    add_common(classify, common, true);
    classify->add_option("--rank", rank)->required();
    classify->add_option("--degree", degree)->required();

    auto* picard = app.add_subcommand("picard", "real locus of Pic^d");
    add_common(picard, common, true);
    picard->add_option("--degree", degree)->required();

    auto* topo = app.add_subcommand("topo", "topological types and component tables");
    add_common(topo, common, false);
    topo->add_option("--rank", rank)->required();
    topo->add_option("--degree", degree)->required();
    topo->add_option("--genus", genus, "genus of the curve (default 1)");
    topo->add_option("--real-circles", real_circles, "number of real circles n (genus >= 2)");

    auto* algebra = app.add_subcommand("algebra", "formal bundle algebra");
    add_common(algebra, common, false);
    algebra->add_option("--bundle", bundle_arg, "bundle JSON: a file path, inline JSON, or -")->required();
    algebra->add_option("--op", op)
        ->required()
        ->check(CLI::IsMember({"normal-form", "slope", "semistable", "polystable", "gr", "s-equiv", "dual", "twist"}));
    algebra->add_option("--other", other_arg, "second bundle for s-equiv");
    algebra->add_option("--line", line_arg, "degree-0 line class for twist");

    auto* indec = app.add_subcommand("indec", "the indecomposable bundle F_{x0}(r, d), optionally twisted");
    add_common(indec, common, true);
    indec->add_option("--rank", rank)->required();
    indec->add_option("--degree", degree)->required();
    indec->add_option("--twist", twist_arg, "degree-0 line class L");

    auto* run = app.add_subcommand("run", "execute a JSON request (or an array of requests)");
    add_common(run, common, true);
    run->add_option("--request", request_arg, "request JSON: a file path, inline JSON, or - (default)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        std::cerr << "rebc: " << e.what() << '\n';
        return kExitInput;
    }

    json report;
    try {
        const auto opts = options_of(common);
        if (*run) {
            const json request = load_json_arg(request_arg, "request");
            if (request.is_array()) {
                report = json::array();
                for (const auto& r : request) report.push_back(rebc::cli::run_request(r, opts));
            } else {
                report = rebc::cli::run_request(request, opts);
            }
        } else {
            const auto curve = rebc::io::decode_curve(load_json_arg(common.curve, "curve"));
            if (*classify) {
                report = rebc::cli::cmd_classify(curve, rank, degree, opts);
            } else if (*picard) {
                report = rebc::cli::cmd_picard(curve, degree, opts);
            } else if (*topo) {
                report = rebc::cli::cmd_topo(curve, rank, degree, genus, real_circles);
            } else if (*algebra) {
                std::optional<rebc::FormalBundle> other;
                std::optional<rebc::PicClass> line;
                if (!other_arg.empty()) other = rebc::io::decode_bundle(load_json_arg(other_arg, "bundle"));
                if (!line_arg.empty()) line = rebc::io::decode_pic(load_json_arg(line_arg, "line"));
                report = rebc::cli::cmd_algebra(curve, rebc::io::decode_bundle(load_json_arg(bundle_arg, "bundle")),
                                                op, other, line);
            } else if (*indec) {
                std::optional<rebc::PicClass> twist;
                if (!twist_arg.empty()) twist = rebc::io::decode_pic(load_json_arg(twist_arg, "twist"));
                report = rebc::cli::cmd_indec(curve, rank, degree, twist, opts);
            }
        }
    } catch (const std::exception& e) {
        // InputError and library precondition failures are both input errors here.
        std::cerr << "rebc: " << e.what() << '\n';
        std::cout << json{{"schema_version", rebc::cli::kSchemaVersion}, {"error", {{"message", e.what()}}}}.dump(2)
                  << '\n';
        return kExitInput;
    }

    emit(report, common.format);
    bool ok = true;
    if (report.is_array()) {
        for (const auto& r : report) ok = ok && rebc::cli::verification_ok(r);
    } else {
        ok = rebc::cli::verification_ok(report);
    }
    return ok ? 0 : kExitMismatch;
}
