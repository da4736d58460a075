#ifndef HH_CLI_HPP
#define HH_CLI_HPP

#include <json.hpp>

#include <iosfwd>
#include <string>
#include <vector>

namespace hh::cli {

using Json = nlohmann::ordered_json;

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

/// Machine-readable result of one invocation.
///
/// JSON schema:
///
///     {
///       "command":   string,
///       "inputs":    object of echoed arguments,
///       "outputs":   object of named reals / enclosures / flags,
///       "citations": [string, ...],   // which inequalities were applied
///       "status":    "ok" | "verification_failed" | "error"
///     }
///
/// Enclosures are objects {"lower": r, "upper": r}. Reals are written in
/// shortest round-trip form; a degenerate (undefined) real is null.
struct Report
{
    std::string command;
    Json inputs = Json::object();
    Json outputs = Json::object();
    std::vector<std::string> citations;
    std::string status = "ok";
};

Json to_json(const Report& report);

/// Throws nlohmann::json::exception when a required field is missing or
/// has the wrong type.
Report report_from_json(const Json& j);

/// Plain text rendering; reals at 9 significant digits.
std::string to_table(const Report& report);

/// Entry point. `args` excludes the program name. Returns the exit code:
/// 0 success, 1 a verified property failed, 2 usage or domain error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace hh::cli

#endif
