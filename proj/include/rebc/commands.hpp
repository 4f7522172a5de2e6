#pragma once

// Report builders behind the command-line front end. Each returns the full
// report envelope; all computation lives in the library modules.

#include <optional>
#include <string>

#include "rebc/json_io.hpp"

namespace rebc::cli {

using io::json;

inline constexpr int kSchemaVersion = 1;

struct CommandOptions {
    std::optional<std::int64_t> verify_grid;  ///< run the oracle at this N
    unsigned threads = 1;
};

json cmd_classify(const CurveSpec& curve, std::int64_t rank, std::int64_t degree, const CommandOptions& opts = {});
json cmd_picard(const CurveSpec& curve, std::int64_t degree, const CommandOptions& opts = {});
json cmd_topo(const CurveSpec& curve, std::int64_t rank, std::int64_t degree, std::int64_t genus = 1,
              std::optional<int> real_circles = std::nullopt);

/// op is one of normal-form, slope, semistable, polystable, gr, s-equiv,
/// dual, twist. s-equiv needs `other`; twist needs `line`.
json cmd_algebra(const CurveSpec& curve, const FormalBundle& bundle, const std::string& op,
                 const std::optional<FormalBundle>& other = std::nullopt,
                 const std::optional<PicClass>& line = std::nullopt);

/// Describes F_{x0}(r, d), or F_{x0}(r, d) (x) L when a degree-0 twist is given.
json cmd_indec(const CurveSpec& curve, std::int64_t rank, std::int64_t degree,
               const std::optional<PicClass>& twist = std::nullopt, const CommandOptions& opts = {});

/// Dispatches a request envelope {"command": ..., "curve": ..., ...}.
json run_request(const json& request, const CommandOptions& opts = {});

/// True unless the report carries a verification block with match = false.
bool verification_ok(const json& report);

/// Line-oriented rendering of a report ("path: value").
std::string render_text(const json& report);

}  // namespace rebc::cli
