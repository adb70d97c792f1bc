#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "stoyanov/engine.hpp"
#include "stoyanov/syntax.hpp"

namespace stoyanov::cli {

inline constexpr const char* kVersion = "1.0.0";

class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

enum class Command { Eval, Check, Admits, Witness, Spectrum, Padic, Covering };

/// Parsed command line. `sub` is the check predicate, the eval form
/// (term|log|m), or the padic / covering subcommand; `args` holds key=value
/// parameters such as kappa, sigma, weight, s and t.
struct Query {
    Command command = Command::Eval;
    std::string sub;
    std::map<std::string, std::string> args;
    std::optional<Cardinal> term;
    std::optional<TopologyClass> clazz;
    std::string file;

    std::vector<std::string> assume;
    std::optional<std::string> context_file;
    bool json = false;
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> samples;

    friend bool operator==(const Query&, const Query&) = default;
};

/// Recursive descent over whitespace separated words; brackets group words.
/// Throws UsageError naming the column of the offending word.
Query parse_query(std::string_view input);
/// Canonical text; parse_query(render(q)) == q up to term normalization.
std::string render(const Query& q);

struct ResolvedContext {
    AxiomContext context;
    std::vector<std::string> warnings;
};

/// Context file first, then --assume directives, which win on conflict.
ResolvedContext resolve_context(const Query& q);

struct Result {
    enum class Kind { Verdict, Value, Boolean };

    Kind kind = Kind::Value;
    Truth verdict = Truth::Unknown;
    bool flag = false;
    std::optional<std::string> value;
    Trace trace;
    /// Extra machine-readable fields (bounds, reason, members, ...).
    nlohmann::json extra = nlohmann::json::object();
    std::vector<std::string> warnings;

    /// 0 provable / value / true, 1 refutable / false, 2 unknown.
    int exit_code() const;
};

Result run(const Query& q, const AxiomContext& ctx);

/// Human: verdict line, value, numbered trace. Machine: one JSON object with
/// verdict, value, trace and version.
std::string format(const Result& r, bool machine);

/// Full CLI behaviour on a command line; returns the exit code.
int main_with(std::string_view input, std::string& out, std::string& err);
/// Joins argv words, quoting those that contain whitespace.
std::string join_args(const std::vector<std::string>& words);

std::string usage();

}  // namespace stoyanov::cli
