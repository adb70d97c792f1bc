#pragma once

// Term corpora and independent oracles shared by the unit tests and the
// acceptance binary.

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "stoyanov/cardinal.hpp"
#include "stoyanov/context.hpp"
#include "stoyanov/syntax.hpp"

namespace corpus {

using stoyanov::Cardinal;
using stoyanov::Ordinal;

inline Cardinal card(const std::string& s) { return stoyanov::parse_cardinal(s); }

inline stoyanov::AxiomContext easton() {
    return stoyanov::AxiomContext({}, {{card("aleph(0)"), card("aleph(w+2)")}, {card("aleph(w+1)"), card("aleph(w+2)")}});
}

inline stoyanov::AxiomContext lusin() { return stoyanov::AxiomContext({stoyanov::Assumption::Lusin}, {}); }

/// c = aleph_1 and 2^aleph_1 = aleph_2.
inline stoyanov::AxiomContext ch_no_lusin() {
    return stoyanov::AxiomContext({}, {{card("aleph(0)"), card("aleph(1)")}, {card("aleph(1)"), card("aleph(2)")}});
}

/// Indices below w*2 used for the exhaustive GCH sweep.
inline std::vector<std::string> gch_indices() { return {"0", "1", "2", "w", "w+1"}; }

/// Terms of depth <= 3 over aleph/beth atoms with the given indices: atoms,
/// unary wrappers (2^, poww, weakpow) applied up to twice, and binary sups of
/// atoms and of wrapped atoms.
inline std::vector<Cardinal> terms_up_to_depth3(const std::vector<std::string>& indices) {
    std::vector<Cardinal> atoms;
    for (const auto& i : indices) {
        atoms.push_back(card("aleph(" + i + ")"));
        atoms.push_back(card("beth(" + i + ")"));
    }
    auto wrap = [](const Cardinal& x) {
        return std::vector<Cardinal>{Cardinal::exp2(x), Cardinal::pow_omega(x), Cardinal::weak_pow(x)};
    };
    std::vector<Cardinal> depth2;
    for (const auto& a : atoms)
        for (auto& w : wrap(a)) depth2.push_back(w);
    for (std::size_t i = 0; i < atoms.size(); ++i)
        for (std::size_t j = i + 1; j < atoms.size(); ++j) depth2.push_back(Cardinal::sup({atoms[i], atoms[j]}));

    std::vector<Cardinal> out = atoms;
    out.insert(out.end(), depth2.begin(), depth2.end());
    for (const auto& d : depth2)
        for (auto& w : wrap(d)) out.push_back(w);
    for (const auto& a : atoms)
        for (const auto& d : depth2)
            if (!d.is(Cardinal::Kind::Sup)) out.push_back(Cardinal::sup({a, d}));
    return out;
}

// ---------------------------------------------------------------------------
// GCH oracle: under GCH every infinite term denotes aleph(i) for an index
// computed here by direct recursion on the term, with no use of the reasoner.

inline bool is_limit(const Ordinal& o) { return classify(o) == stoyanov::OrdinalKind::Limit; }

/// cf(aleph(i)) = w, for countable indices below w1.
inline bool cf_omega(const Ordinal& i) { return i.is_zero() || is_limit(i); }

inline Ordinal gch_index(const Cardinal& t) {
    using K = Cardinal::Kind;
    switch (t.kind()) {
        case K::Aleph:
        case K::Beth: return t.index().ordinal();
        case K::Exp2: return successor(gch_index(t.arg()));
        case K::PowOmega: {
            const Ordinal i = gch_index(t.arg());
            return cf_omega(i) ? successor(i) : i;
        }
        case K::WeakPow: return gch_index(t.arg());  // 2^{<w} = w, 2^{<aleph(j+1)} = 2^aleph(j), limits are strong
        case K::Sup: {
            Ordinal m;
            for (const auto& x : t.items()) m = std::max(m, gch_index(x));
            return m;
        }
        case K::Fin: break;
    }
    throw std::domain_error("finite term in the GCH oracle");
}

/// Min(k, s) under GCH: k <= 2^s and (k = 2^s or (cf s = w and 2^{<s} <= k)).
inline bool gch_min(const Ordinal& k, const Ordinal& s) {
    const Ordinal exp = successor(s);
    if (k > exp) return false;
    if (k == exp) return true;
    return cf_omega(s) && s <= k;
}

/// m(s) under GCH: log s is the predecessor for successors and s itself
/// otherwise; m(s) is the least index >= max(1, log s) of uncountable cofinality.
inline Ordinal gch_m(const Ordinal& s) {
    Ordinal log = classify(s) == stoyanov::OrdinalKind::Successor ? predecessor(s) : s;
    if (log.is_zero()) return Ordinal::finite(1);
    return is_limit(log) ? successor(log) : log;
}

inline bool gch_ps(const Ordinal& k, const Ordinal& s) { return gch_m(s) <= k && k <= successor(s); }

}  // namespace corpus
