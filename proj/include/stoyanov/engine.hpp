#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "stoyanov/reasoner.hpp"

namespace stoyanov {

enum class TopologyClass {
    Minimal,
    Pseudocompact,
    MinimalPseudocompact,
    ZeroDimMinimalPseudocompact,
    ConnectedMinimal,
    ConnectedMinimalPseudocompact,
    LocallyConnectedMinimal,
};

std::string to_string(TopologyClass c);
/// Accepts the CLI spellings (minimal, pseudocompact, minimal-pseudocompact,
/// zero-dim-minimal-pseudocompact, connected-minimal,
/// connected-minimal-pseudocompact, locally-connected-minimal).
TopologyClass parse_topology_class(std::string_view s);

/// Does the free abelian group F_kappa admit a group topology of this class
/// (and, optionally, of this weight)?
struct TopologyQuery {
    Cardinal kappa;
    TopologyClass clazz = TopologyClass::Minimal;
    std::optional<Cardinal> weight;
};

/// F_0 is the trivial group; every question about it is answered by
/// "trivially compact" rather than a verdict.
class TrivialGroupError : public std::domain_error {
public:
    TrivialGroupError() : std::domain_error("F_0 is the trivial group and is trivially compact") {}
};

/// A sequence (s_n) witnessing Min(kappa, sigma).
struct WitnessSeq {
    enum class Kind { Constant, Finite, AlephsAlong, BethsAlong };

    Kind kind = Kind::Constant;
    Cardinal sigma = Cardinal::fin(0);
    Cardinal kappa = Cardinal::fin(0);
    /// Limit index for AlephsAlong / BethsAlong.
    std::optional<Ordinal> limit;

    Cardinal element(std::uint64_t n) const;
    std::string describe() const;
};

struct SpectrumMember {
    Cardinal sigma;
    Verdict verdict;
};

/// Description of {s : Min(kappa, s)}. When complete is set, members is the
/// whole set.
struct WeightSpectrum {
    Verdict exponential;
    std::vector<SpectrumMember> members;
    bool complete = false;
    std::string description;
};

/// Decision procedures for Min, Stoyanov cardinals, Ps and the topologization
/// questions, on top of a Reasoner. Same threading rules as Reasoner.
class Engine {
public:
    explicit Engine(AxiomContext ctx = {}, std::optional<std::uint64_t> rule_order_seed = std::nullopt);

    Reasoner& reasoner() { return r_; }
    const AxiomContext& context() const { return r_.context(); }

    Verdict min_cond(const Cardinal& kappa, const Cardinal& sigma);
    Verdict is_stoyanov(const Cardinal& kappa);
    Verdict ps_cond(const Cardinal& kappa, const Cardinal& sigma);
    Verdict admits(const TopologyQuery& q);
    WeightSpectrum weight_spectrum(const Cardinal& kappa);

    /// Throws std::runtime_error("no witness constructed ...") unless
    /// min_cond(kappa, sigma) is Provable.
    WitnessSeq witness_min(const Cardinal& kappa, const Cardinal& sigma);
    /// Re-checks a witness with this engine's own comparisons.
    Verdict verify_witness(const WitnessSeq& w);

private:
    Verdict admits_minimal(const Cardinal& k, const std::optional<Cardinal>& weight);
    Verdict admits_pseudocompact(const Cardinal& k, const std::optional<Cardinal>& weight);
    Verdict admits_minimal_pseudocompact(const Cardinal& k, const std::optional<Cardinal>& weight);
    Verdict admits_connected(const Cardinal& k, bool pseudocompact, const std::optional<Cardinal>& weight);
    Verdict lusin();
    std::vector<Cardinal> ps_candidates(const Cardinal& k);

    Reasoner r_;
};

Verdict min_cond(const Cardinal& kappa, const Cardinal& sigma, const AxiomContext& ctx);
Verdict is_stoyanov(const Cardinal& kappa, const AxiomContext& ctx);
Verdict ps_cond(const Cardinal& kappa, const Cardinal& sigma, const AxiomContext& ctx);
Verdict admits(const TopologyQuery& q, const AxiomContext& ctx);
WeightSpectrum weight_spectrum(const Cardinal& kappa, const AxiomContext& ctx);
WitnessSeq witness_min(const Cardinal& kappa, const Cardinal& sigma, const AxiomContext& ctx);

}  // namespace stoyanov
