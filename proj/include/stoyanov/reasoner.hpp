#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "stoyanov/cardinal.hpp"
#include "stoyanov/context.hpp"
#include "stoyanov/verdict.hpp"

namespace stoyanov {

/// Interval answer for cardinal functions that ZFC plus the context does not
/// pin down. When lower_strict is set the value lies strictly above lower.
struct Bounds {
    Cardinal lower = Cardinal::fin(0);
    bool lower_strict = false;
    Cardinal upper = Cardinal::fin(0);
};

/// Exact value when derivable, otherwise bounds. When exact is set the bounds
/// collapse onto it.
struct Estimate {
    std::optional<Cardinal> exact;
    Bounds bounds;
    Trace trace;
};

enum class Cofinality { Omega, Uncountable, Unknown };

std::string to_string(Cofinality c);

struct CofinalityResult {
    Cofinality value = Cofinality::Unknown;
    Trace trace;
};

struct ExponentialResult {
    Verdict verdict;
    /// s with 2^s = k, when the verdict is Provable.
    std::optional<Cardinal> base;
};

/// Sound, incomplete comparison and rewriting of cardinal terms under an
/// axiom context.
///
/// A Reasoner caches normal forms and proofs, so it is cheap to reuse for many
/// queries against the same context but is not safe for concurrent use; create
/// one per thread. Every Provable answer comes with a trace whose steps are
/// drawn from rule_catalog(). The optional seed permutes the order in which
/// comparison rules are tried; answers must not depend on it.
class Reasoner {
public:
    explicit Reasoner(AxiomContext ctx = {}, std::optional<std::uint64_t> rule_order_seed = std::nullopt);

    const AxiomContext& context() const { return ctx_; }

    Cardinal normalize(const Cardinal& t);

    std::optional<Trace> prove_le(const Cardinal& a, const Cardinal& b);
    std::optional<Trace> prove_lt(const Cardinal& a, const Cardinal& b);

    Verdict leq(const Cardinal& a, const Cardinal& b);
    Verdict less(const Cardinal& a, const Cardinal& b);
    /// Provable when both a <= b and b <= a are derivable; Refutable when a
    /// strict inequality is.
    Verdict equal(const Cardinal& a, const Cardinal& b);

    /// Infinite after normalization. Finite terms always normalize to Fin.
    bool is_infinite(const Cardinal& t);

    // Cardinal functions. Those with an infinite-input precondition throw
    // std::domain_error on finite input.
    CofinalityResult cofinality(const Cardinal& t);
    Verdict is_strong_limit(const Cardinal& t);
    ExponentialResult is_exponential(const Cardinal& t);
    Estimate log_card(const Cardinal& t);
    Estimate weak_power(const Cardinal& t);
    Estimate m_bounds(const Cardinal& sigma);

    const Cardinal& continuum() const { return continuum_; }

private:
    using Rule = std::optional<Trace> (Reasoner::*)(const Cardinal&, const Cardinal&);

    struct NormalEquality {
        Cardinal argument;
        Cardinal value;
    };

    Cardinal normalize_node(const Cardinal& t);
    Cardinal normalize_sup(std::vector<Cardinal> items);
    std::optional<Cardinal> pinned_exp(const Cardinal& base);
    std::optional<Cardinal> pinned_weak_pow(const Cardinal& base);
    const std::vector<NormalEquality>& equalities();
    bool gch() const;
    bool strong_limit_atom(const Cardinal& t) const;
    std::optional<Cardinal> max_item(const Cardinal& sup);

    std::optional<Trace> prove(bool strict, const Cardinal& a, const Cardinal& b);

    std::optional<Trace> le_refl(const Cardinal& a, const Cardinal& b);
    std::optional<Trace> le_finite(const Cardinal& a, const Cardinal& b);
    std::optional<Trace> le_sup_left(const Cardinal& a, const Cardinal& b);
    std::optional<Trace> le_sup_right(const Cardinal& a, const Cardinal& b);
    std::optional<Trace> le_index(const Cardinal& a, const Cardinal& b);
    std::optional<Trace> le_aleph_zero(const Cardinal& a, const Cardinal& b);
    std::optional<Trace> le_aleph_successor(const Cardinal& a, const Cardinal& b);
    std::optional<Trace> le_below_exp(const Cardinal& a, const Cardinal& b);
    std::optional<Trace> pinned_below_strong_limit(const Cardinal& a, const Cardinal& b);
    std::optional<Trace> le_exp_above(const Cardinal& a, const Cardinal& b);
    std::optional<Trace> le_pow_left(const Cardinal& a, const Cardinal& b);
    std::optional<Trace> le_pow_right(const Cardinal& a, const Cardinal& b);
    std::optional<Trace> le_weak_left(const Cardinal& a, const Cardinal& b);
    std::optional<Trace> le_weak_right(const Cardinal& a, const Cardinal& b);

    std::optional<Trace> lt_finite(const Cardinal& a, const Cardinal& b);
    std::optional<Trace> lt_sup_left(const Cardinal& a, const Cardinal& b);
    std::optional<Trace> lt_sup_right(const Cardinal& a, const Cardinal& b);
    std::optional<Trace> lt_index(const Cardinal& a, const Cardinal& b);
    std::optional<Trace> lt_successor_bound(const Cardinal& a, const Cardinal& b);
    std::optional<Trace> lt_below_exp(const Cardinal& a, const Cardinal& b);
    std::optional<Trace> lt_exp_below(const Cardinal& a, const Cardinal& b);
    std::optional<Trace> lt_pow(const Cardinal& a, const Cardinal& b);
    std::optional<Trace> lt_weak(const Cardinal& a, const Cardinal& b);

    AxiomContext ctx_;
    Cardinal continuum_;
    std::vector<Rule> le_rules_;
    std::vector<Rule> lt_rules_;

    std::vector<NormalEquality> equalities_;
    bool equalities_ready_ = false;

    std::unordered_map<std::string, Cardinal> norm_memo_;
    std::unordered_set<std::string> norm_active_;
    std::unordered_map<std::string, std::optional<Trace>> proof_memo_;
    std::unordered_set<std::string> proof_active_;
    int proof_depth_ = 0;
    int norm_depth_ = 0;
    std::uint64_t truncations_ = 0;
};

// Convenience wrappers constructing a Reasoner for a single query.
Cardinal normalize(const Cardinal& t, const AxiomContext& ctx);
Verdict leq(const Cardinal& a, const Cardinal& b, const AxiomContext& ctx);
CofinalityResult cofinality(const Cardinal& t, const AxiomContext& ctx);
Estimate log_card(const Cardinal& t, const AxiomContext& ctx);
ExponentialResult is_exponential(const Cardinal& t, const AxiomContext& ctx);
Verdict is_strong_limit(const Cardinal& t, const AxiomContext& ctx);
Estimate weak_power(const Cardinal& t, const AxiomContext& ctx);
Estimate m_bounds(const Cardinal& sigma, const AxiomContext& ctx);

}  // namespace stoyanov
