#include "stoyanov/verdict.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace stoyanov {

Truth operator&&(Truth a, Truth b) {
    if (a == Truth::Refutable || b == Truth::Refutable) return Truth::Refutable;
    if (a == Truth::Provable && b == Truth::Provable) return Truth::Provable;
    return Truth::Unknown;
}

Truth operator||(Truth a, Truth b) {
    if (a == Truth::Provable || b == Truth::Provable) return Truth::Provable;
    if (a == Truth::Refutable && b == Truth::Refutable) return Truth::Refutable;
    return Truth::Unknown;
}

Truth operator!(Truth a) {
    switch (a) {
        case Truth::Provable: return Truth::Refutable;
        case Truth::Refutable: return Truth::Provable;
        default: return Truth::Unknown;
    }
}

std::string_view to_string(Truth t) {
    switch (t) {
        case Truth::Provable: return "provable";
        case Truth::Refutable: return "refutable";
        default: return "unknown";
    }
}

namespace {

constexpr std::array kRules = {
    // comparison backbone
    RuleInfo{"reflexivity", "x <= x"},
    RuleInfo{"finite-arithmetic", "arithmetic of natural numbers"},
    RuleInfo{"finite-below-infinite", "every finite cardinal is below every infinite cardinal"},
    RuleInfo{"aleph-index", "the alephs are strictly increasing in their index"},
    RuleInfo{"beth-index", "the beths are strictly increasing in their index"},
    RuleInfo{"aleph-below-beth", "aleph_a <= beth_a, by induction on a"},
    RuleInfo{"aleph-zero-least", "aleph_0 is the least infinite cardinal"},
    RuleInfo{"aleph-successor", "aleph_{a+1} is the least cardinal above aleph_a"},
    RuleInfo{"cantor", "Cantor: k < 2^k"},
    RuleInfo{"exp-monotone", "k <= l implies 2^k <= 2^l"},
    RuleInfo{"context-equality", "assumed value of the continuum function"},
    RuleInfo{"not-ch", "assumption: 2^aleph_0 >= aleph_2"},
    RuleInfo{"strong-limit-bound", "below a strong limit l, k < l implies 2^k < l"},
    RuleInfo{"koenig", "Koenig: cf(2^k) > k, so 2^k has uncountable cofinality"},
    RuleInfo{"koenig-power", "Koenig: k < k^w whenever cf(k) = w"},
    RuleInfo{"sup-max", "the supremum of a finite list is its largest element"},
    RuleInfo{"pow-omega-bounds", "k <= k^w <= 2^k, and 2^aleph_0 <= k^w for infinite k"},
    RuleInfo{"weak-power-bounds", "k <= 2^{<k} <= 2^k, and 2^m <= 2^{<k} for m < k"},
    RuleInfo{"undecided", "no rule in the catalog decides this statement"},
    // normalization
    RuleInfo{"normalize", "rewriting to normal form under the axiom context"},
    RuleInfo{"gch", "GCH: 2^aleph_a = aleph_{a+1} and beth_a = aleph_a"},
    RuleInfo{"hausdorff", "Hausdorff: aleph_{a+1}^w = aleph_{a+1} * aleph_a^w"},
    RuleInfo{"strong-limit-power", "k^cf(k) = 2^k for strong limit k; k^w = k when cf(k) > w"},
    // cardinal functions
    RuleInfo{"cofinality", "cf(aleph_{a+1}) = aleph_{a+1}; cf(aleph_l) = cf(beth_l) = cf(l) for limit l"},
    RuleInfo{"strong-limit", "k is a strong limit iff 2^m < k for all m < k"},
    RuleInfo{"not-strong-limit", "some m < k has k <= 2^m"},
    RuleInfo{"exponential", "k = 2^s for an explicit s"},
    RuleInfo{"non-exponential-strong-limit", "an infinite strong limit is never of the form 2^s"},
    RuleInfo{"non-exponential-koenig", "cf(2^s) > w, so a cardinal of countable cofinality is not 2^s"},
    RuleInfo{"log-definition", "log k = min{s : k <= 2^s}"},
    RuleInfo{"log-strong-limit", "log k = k for an infinite strong limit k"},
    RuleInfo{"m-bounds", "m(s) >= 2^w, cf(m(s)) > w and log s <= m(s) <= (log s)^w"},
    RuleInfo{"m-omega", "m(w) = 2^w"},
    RuleInfo{"m-monotone", "l <= s implies m(l) <= m(s)"},
    // Min / Stoyanov
    RuleInfo{"min-small", "Min(k, w) whenever w <= k <= 2^w"},
    RuleInfo{"min-exponential", "k = 2^s implies Min(k, s), witnessed by the constant sequence"},
    RuleInfo{"min-closed-form",
             "Min(k,s) iff k <= 2^s and (k = 2^s or (cf(s) = w and 2^{<s} <= k))"},
    RuleInfo{"min-uncountable-cofinality", "cf(s) > w: Min(k,s) iff k = 2^s"},
    RuleInfo{"stoyanov-finite", "finite cardinals count as Stoyanov cardinals"},
    RuleInfo{"stoyanov-exponential", "an exponential cardinal is Stoyanov"},
    RuleInfo{"stoyanov-log",
             "non-exponential k: Min(k,s) iff s = log k and cf(log k) = w"},
    // Ps
    RuleInfo{"ps-characterization", "Ps(k,s) iff m(s) <= k <= 2^s"},
    RuleInfo{"ps-continuum", "Ps(2^w, w) and Ps(2^w, aleph_1) hold"},
    RuleInfo{"ps-exponential", "Ps(2^s, s) and Ps(2^s, 2^{2^s}) hold"},
    RuleInfo{"ps-pow-omega", "s^w = s implies Ps(s, 2^s)"},
    RuleInfo{"ps-strong-limit",
             "k strong limit with cf(k) = w: 2^s < k for s < k, and m(s) > k for s >= k"},
    RuleInfo{"ps-transfer", "Min(k,s) and Ps(k,l) imply Ps(k,s)"},
    RuleInfo{"van-douwen", "van Douwen: an infinite pseudocompact group has size >= 2^w"},
    // topologization
    RuleInfo{"free-group-size", "|F_k| = max(w, k)"},
    RuleInfo{"trivially-compact", "F_0 is the trivial group"},
    RuleInfo{"finite-rank-minimal", "Prodanov: F_n admits a minimal group topology for finite n"},
    RuleInfo{"stoyanov-theorem", "Stoyanov: F_k admits a minimal group topology iff k is Stoyanov"},
    RuleInfo{"minimal-weight", "a minimal abelian group G satisfies Min(|G|, w(G))"},
    RuleInfo{"ps-free", "F_k admits a pseudocompact group topology of weight s iff Ps(k,s)"},
    RuleInfo{"minimal-pseudocompact-embedding",
             "Min(k,s), Ps(k,s) and s >= aleph_1 give a zero-dimensional minimal pseudocompact "
             "topology of weight s on F_k"},
    RuleInfo{"mps-equivalence",
             "for k > 2^w, F_k admits a (zero-dimensional) minimal pseudocompact topology iff it "
             "admits a minimal one and a pseudocompact one"},
    RuleInfo{"metrization",
             "a minimal abelian group of size < 2^{aleph_1} is metrizable, so minimal "
             "pseudocompact means compact metric; free groups are never compact"},
    RuleInfo{"continuum-lusin",
             "F_{2^w} admits a (connected, zero-dimensional) minimal pseudocompact topology iff "
             "2^{aleph_1} = 2^w"},
    RuleInfo{"connected-exponential",
             "for k > 2^w, F_k admits a connected minimal (pseudocompact) topology of weight s "
             "iff k = 2^s"},
    RuleInfo{"connected-weight",
             "a connected minimal topology of weight s on F_k forces k = 2^s"},
    RuleInfo{"connected-embedding",
             "k = 2^s with s >= aleph_1 gives a connected minimal pseudocompact topology of weight s"},
    RuleInfo{"connected-size", "a nontrivial connected Tychonoff group has size >= 2^w"},
    RuleInfo{"witness-check", "a witness satisfies sup s_n = s and sup 2^{s_n} <= k <= 2^s"},
    RuleInfo{"no-locally-connected",
             "no nontrivial free abelian group admits a locally connected minimal topology"},
    RuleInfo{"three-valued-logic", "Kleene connectives over provable / refutable / unknown"},
    // finite-rank p-adic subgroups
    RuleInfo{"essential-rank",
             "a subgroup of Z_p^n meets every nonzero closed subgroup iff it has rational rank n there"},
    RuleInfo{"dense-mod-p", "a subgroup is dense in Z_p^n iff its image spans (Z/p)^n"},
    RuleInfo{"minimality-criterion", "a dense subgroup of a compact abelian group is minimal iff it is essential"},
    RuleInfo{"essential-sampling", "x misses H iff some integer annihilator of span(H) is not orthogonal to x"},
    // finite covering analogue
    RuleInfo{"dense-family-check", "every t coordinates realise all 2^t patterns"},
    RuleInfo{"dense-family-search", "exhaustive branch and bound over families containing the zero row"},
    RuleInfo{"dense-family-bound", "t fixed coordinates need 2^t distinct rows"},
};

}  // namespace

std::span<const RuleInfo> rule_catalog() { return kRules; }

const RuleInfo& rule(std::string_view name) {
    auto it = std::find_if(kRules.begin(), kRules.end(), [&](const RuleInfo& r) { return r.name == name; });
    if (it == kRules.end()) throw std::out_of_range("rule not in catalog: " + std::string(name));
    return *it;
}

Step make_step(std::string_view rule_name, std::string conclusion, std::vector<std::string> premises) {
    const auto& r = rule(rule_name);
    return Step{std::string(r.name), std::string(r.citation), std::move(premises), std::move(conclusion)};
}

void append(Trace& into, const Trace& extra) { into.insert(into.end(), extra.begin(), extra.end()); }

std::string explain(const Trace& trace) {
    if (trace.empty()) return "no steps\n";
    std::ostringstream os;
    for (std::size_t i = 0; i < trace.size(); ++i) {
        const auto& s = trace[i];
        os << ' ' << (i + 1) << ". " << s.conclusion << "  [" << s.rule << ": " << s.citation << "]\n";
    }
    return os.str();
}

std::string explain(const Verdict& v) {
    std::string head(to_string(v.value));
    std::transform(head.begin(), head.end(), head.begin(), [](unsigned char c) { return std::toupper(c); });
    return head + "\n" + explain(v.trace);
}

}  // namespace stoyanov
