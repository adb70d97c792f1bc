#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace stoyanov {

/// Three-valued answer: derivable, refutable, or not decided by the rule catalog.
enum class Truth { Provable, Refutable, Unknown };

Truth operator&&(Truth a, Truth b);
Truth operator||(Truth a, Truth b);
Truth operator!(Truth a);
std::string_view to_string(Truth t);

struct Step {
    std::string rule;
    std::string citation;
    std::vector<std::string> premises;
    std::string conclusion;
};

using Trace = std::vector<Step>;

struct Verdict {
    Truth value = Truth::Unknown;
    Trace trace;

    bool provable() const { return value == Truth::Provable; }
    bool refutable() const { return value == Truth::Refutable; }
    bool unknown() const { return value == Truth::Unknown; }
};

struct RuleInfo {
    std::string_view name;
    std::string_view citation;
};

/// Every rule the reasoner and the decision procedures may cite.
std::span<const RuleInfo> rule_catalog();
/// Throws std::out_of_range for names outside the catalog.
const RuleInfo& rule(std::string_view name);

/// Step citing a catalogued rule.
Step make_step(std::string_view rule_name, std::string conclusion, std::vector<std::string> premises = {});

/// Appends `extra` to `into`.
void append(Trace& into, const Trace& extra);

/// Numbered, human readable rendering; "no steps" for an empty trace.
std::string explain(const Trace& trace);
std::string explain(const Verdict& v);

}  // namespace stoyanov
