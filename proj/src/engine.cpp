#include "stoyanov/engine.hpp"

#include <algorithm>
#include <sstream>

namespace stoyanov {

namespace {

using K = Cardinal::Kind;

const Cardinal& aleph0() {
    static const Cardinal a = Cardinal::aleph(Ordinal::zero());
    return a;
}
const Cardinal& aleph1() {
    static const Cardinal a = Cardinal::aleph(Ordinal::finite(1));
    return a;
}

Verdict close(Truth value, std::initializer_list<const Trace*> parts, std::string_view rule_name,
              std::string conclusion) {
    Verdict v{value, {}};
    std::vector<std::string> premises;
    for (const Trace* p : parts) {
        append(v.trace, *p);
        if (!p->empty()) premises.push_back(p->back().conclusion);
    }
    v.trace.push_back(make_step(rule_name, std::move(conclusion), std::move(premises)));
    return v;
}

std::string said(Truth t, const std::string& claim) {
    switch (t) {
        case Truth::Provable: return claim;
        case Truth::Refutable: return "not " + claim;
        default: return claim + " is undecided";
    }
}

Truth truth_of(Cofinality c) {
    switch (c) {
        case Cofinality::Omega: return Truth::Provable;
        case Cofinality::Uncountable: return Truth::Refutable;
        default: return Truth::Unknown;
    }
}

void require_infinite(Reasoner& r, const Cardinal& c, const char* what) {
    if (!r.is_infinite(c)) throw std::domain_error(std::string(what) + " needs infinite cardinals, got " + c.str());
}

std::string q_text(const char* pred, const Cardinal& a, const Cardinal& b) {
    return std::string(pred) + "(" + a.str() + ", " + b.str() + ")";
}

}  // namespace

std::string to_string(TopologyClass c) {
    switch (c) {
        case TopologyClass::Minimal: return "minimal";
        case TopologyClass::Pseudocompact: return "pseudocompact";
        case TopologyClass::MinimalPseudocompact: return "minimal-pseudocompact";
        case TopologyClass::ZeroDimMinimalPseudocompact: return "zero-dim-minimal-pseudocompact";
        case TopologyClass::ConnectedMinimal: return "connected-minimal";
        case TopologyClass::ConnectedMinimalPseudocompact: return "connected-minimal-pseudocompact";
        default: return "locally-connected-minimal";
    }
}

TopologyClass parse_topology_class(std::string_view s) {
    for (auto c : {TopologyClass::Minimal, TopologyClass::Pseudocompact, TopologyClass::MinimalPseudocompact,
                   TopologyClass::ZeroDimMinimalPseudocompact, TopologyClass::ConnectedMinimal,
                   TopologyClass::ConnectedMinimalPseudocompact, TopologyClass::LocallyConnectedMinimal})
        if (to_string(c) == s) return c;
    throw std::invalid_argument("unknown topology class: " + std::string(s));
}

Cardinal WitnessSeq::element(std::uint64_t n) const {
    switch (kind) {
        case Kind::Constant: return sigma;
        case Kind::Finite: return Cardinal::fin(n);
        case Kind::AlephsAlong: return Cardinal::aleph(fundamental_element(*limit, n));
        default: return Cardinal::beth(fundamental_element(*limit, n));
    }
}

std::string WitnessSeq::describe() const {
    switch (kind) {
        case Kind::Constant: return "constant(" + sigma.str() + ")";
        case Kind::Finite: return "finite: s_n = n";
        case Kind::AlephsAlong: return "alephs-along(" + limit->to_string() + "): s_n = aleph(" + limit->to_string() + "[n])";
        default: return "beths-along(" + limit->to_string() + "): s_n = beth(" + limit->to_string() + "[n])";
    }
}

Engine::Engine(AxiomContext ctx, std::optional<std::uint64_t> rule_order_seed) : r_(std::move(ctx), rule_order_seed) {}

// ---------------------------------------------------------------------------
// Min and Stoyanov cardinals

Verdict Engine::min_cond(const Cardinal& kappa, const Cardinal& sigma) {
    const Cardinal k = r_.normalize(kappa), s = r_.normalize(sigma);
    require_infinite(r_, k, "min_cond");
    require_infinite(r_, s, "min_cond");
    const std::string claim = q_text("Min", k, s);

    if (s == aleph0()) {
        Verdict le = r_.leq(k, r_.continuum());
        if (le.provable() && k == r_.continuum()) return close(Truth::Provable, {}, "min-small", claim);
        return close(le.value, {&le.trace}, "min-small", said(le.value, claim));
    }

    const Cardinal two_s = r_.normalize(Cardinal::exp2(s));
    Verdict le = r_.leq(k, two_s);
    if (le.refutable()) return close(Truth::Refutable, {&le.trace}, "min-closed-form", said(Truth::Refutable, claim));
    Verdict eq = r_.equal(k, two_s);
    if (eq.provable()) return close(Truth::Provable, {&eq.trace}, "min-exponential", claim);

    auto cf = r_.cofinality(s);
    const Truth cf_omega = truth_of(cf.value);
    if (cf_omega == Truth::Refutable) {
        const Truth v = le.value && eq.value;
        return close(v, {&cf.trace, &eq.trace}, "min-uncountable-cofinality", said(v, claim));
    }
    Verdict wp = r_.leq(Cardinal::weak_pow(s), k);
    const Truth v = le.value && (eq.value || (cf_omega && wp.value));
    if (v == Truth::Provable) return close(v, {&le.trace, &cf.trace, &wp.trace}, "min-closed-form", claim);
    if (v == Truth::Refutable) {
        // eq is refuted here, and so is the second disjunct through wp.
        return close(v, {&eq.trace, &wp.trace}, "min-closed-form", said(v, claim));
    }
    return close(v, {&le.trace, &eq.trace, &cf.trace, &wp.trace}, "min-closed-form", said(v, claim));
}

Verdict Engine::is_stoyanov(const Cardinal& kappa) {
    const Cardinal k = r_.normalize(kappa);
    const std::string claim = k.str() + " is a Stoyanov cardinal";
    if (!r_.is_infinite(k)) return close(Truth::Provable, {}, "stoyanov-finite", claim);

    auto ex = r_.is_exponential(k);
    if (ex.verdict.provable()) return close(Truth::Provable, {&ex.verdict.trace}, "stoyanov-exponential", claim);

    Estimate lg = r_.log_card(k);
    if (lg.exact) {
        auto cf = r_.cofinality(*lg.exact);
        if (cf.value == Cofinality::Omega)
            return close(Truth::Provable, {&lg.trace, &cf.trace}, "stoyanov-log", claim + " with weight " + lg.exact->str());
        if (cf.value == Cofinality::Uncountable && ex.verdict.refutable())
            return close(Truth::Refutable, {&ex.verdict.trace, &lg.trace, &cf.trace}, "stoyanov-log",
                         said(Truth::Refutable, claim));
    }
    return close(Truth::Unknown, {&ex.verdict.trace, &lg.trace}, "stoyanov-log", said(Truth::Unknown, claim));
}

// ---------------------------------------------------------------------------
// Ps

Verdict Engine::ps_cond(const Cardinal& kappa, const Cardinal& sigma) {
    const Cardinal k = r_.normalize(kappa), s = r_.normalize(sigma);
    require_infinite(r_, k, "ps_cond");
    require_infinite(r_, s, "ps_cond");
    const std::string claim = q_text("Ps", k, s);
    const Cardinal& c = r_.continuum();

    if (auto p = r_.prove_lt(k, c)) return close(Truth::Refutable, {&*p}, "van-douwen", said(Truth::Refutable, claim));

    const Cardinal two_s = r_.normalize(Cardinal::exp2(s));
    if (s == aleph0() || s == aleph1()) {
        Verdict eq = r_.equal(k, c);
        if (eq.provable()) return close(Truth::Provable, {&eq.trace}, "ps-continuum", claim);
    }
    if (Verdict eq = r_.equal(k, two_s); eq.provable())
        return close(Truth::Provable, {&eq.trace}, "ps-exponential", claim);
    const Cardinal two_k = r_.normalize(Cardinal::exp2(k));
    if (Verdict eq = r_.equal(s, two_k); eq.provable()) {
        auto ex = r_.is_exponential(k);
        if (ex.verdict.provable()) return close(Truth::Provable, {&ex.verdict.trace, &eq.trace}, "ps-exponential", claim);
        Verdict pw = r_.equal(Cardinal::pow_omega(k), k);
        if (pw.provable()) return close(Truth::Provable, {&pw.trace, &eq.trace}, "ps-pow-omega", claim);
    }

    if (auto p = r_.prove_lt(two_s, k)) return close(Truth::Refutable, {&*p}, "ps-characterization", said(Truth::Refutable, claim));

    if (Verdict sl = r_.is_strong_limit(k); sl.provable()) {
        auto cf = r_.cofinality(k);
        if (cf.value == Cofinality::Omega)
            return close(Truth::Refutable, {&sl.trace, &cf.trace}, "ps-strong-limit", said(Truth::Refutable, claim));
    }

    Estimate m = r_.m_bounds(s);
    const auto& b = m.bounds;
    if (auto p = r_.prove_lt(k, b.lower))
        return close(Truth::Refutable, {&m.trace, &*p}, "ps-characterization", said(Truth::Refutable, claim));
    if (b.lower_strict)
        if (auto p = r_.prove_le(k, b.lower))
            return close(Truth::Refutable, {&m.trace, &*p}, "ps-characterization", said(Truth::Refutable, claim));
    if (auto p = r_.prove_le(b.upper, k))
        if (auto q = r_.prove_le(k, two_s))
            return close(Truth::Provable, {&m.trace, &*p, &*q}, "ps-characterization", claim);
    return close(Truth::Unknown, {&m.trace}, "ps-characterization", said(Truth::Unknown, claim));
}

// ---------------------------------------------------------------------------
// Topologies on free abelian groups

Verdict Engine::lusin() {
    Verdict v = r_.leq(Cardinal::exp2(aleph1()), Cardinal::exp2(aleph0()));
    return close(v.value, {&v.trace}, "continuum-lusin", said(v.value, "2^aleph(1) = 2^aleph(0)"));
}

std::vector<Cardinal> Engine::ps_candidates(const Cardinal& k) {
    std::vector<Cardinal> out;
    auto add = [&](const Cardinal& c) {
        Cardinal n = r_.normalize(c);
        if (!r_.is_infinite(n)) return;
        if (std::find(out.begin(), out.end(), n) == out.end()) out.push_back(n);
    };
    add(aleph0());
    add(aleph1());
    Estimate lg = r_.log_card(k);
    add(lg.bounds.lower);
    add(lg.bounds.upper);
    add(k);
    add(Cardinal::exp2(k));
    if (auto ex = r_.is_exponential(k); ex.verdict.provable()) add(*ex.base);
    return out;
}

Verdict Engine::admits_minimal(const Cardinal& k, const std::optional<Cardinal>& weight) {
    const bool finite = !r_.is_infinite(k);
    if (!weight) {
        if (finite) return close(Truth::Provable, {}, "finite-rank-minimal", "F_" + k.str() + " admits a minimal topology");
        Verdict s = is_stoyanov(k);
        return close(s.value, {&s.trace}, "stoyanov-theorem", said(s.value, "F_" + k.str() + " admits a minimal topology"));
    }
    const std::string claim = "F_" + k.str() + " admits a minimal topology of weight " + weight->str();
    if (!r_.is_infinite(*weight)) return close(Truth::Refutable, {}, "minimal-weight", said(Truth::Refutable, claim));
    const Cardinal size = finite ? aleph0() : k;
    Verdict m = min_cond(size, *weight);
    return close(m.value, {&m.trace}, "minimal-weight", said(m.value, claim));
}

Verdict Engine::admits_pseudocompact(const Cardinal& k, const std::optional<Cardinal>& weight) {
    std::string claim = "F_" + k.str() + " admits a pseudocompact topology";
    if (weight) claim += " of weight " + weight->str();
    if (!r_.is_infinite(k)) return close(Truth::Refutable, {}, "van-douwen", said(Truth::Refutable, claim));
    if (weight) {
        if (!r_.is_infinite(*weight)) return close(Truth::Refutable, {}, "ps-free", said(Truth::Refutable, claim));
        Verdict p = ps_cond(k, *weight);
        return close(p.value, {&p.trace}, "ps-free", said(p.value, claim));
    }
    if (auto p = r_.prove_lt(k, r_.continuum()))
        return close(Truth::Refutable, {&*p}, "van-douwen", said(Truth::Refutable, claim));
    Verdict sl = r_.is_strong_limit(k);
    auto cf = r_.cofinality(k);
    if (sl.provable() && cf.value == Cofinality::Omega)
        return close(Truth::Refutable, {&sl.trace, &cf.trace}, "ps-strong-limit", said(Truth::Refutable, claim));
    for (const auto& s : ps_candidates(k)) {
        Verdict p = ps_cond(k, s);
        if (p.provable()) return close(Truth::Provable, {&p.trace}, "ps-free", claim);
    }
    return close(Truth::Unknown, {}, "ps-free", said(Truth::Unknown, claim));
}

Verdict Engine::admits_minimal_pseudocompact(const Cardinal& k, const std::optional<Cardinal>& weight) {
    std::string claim = "F_" + k.str() + " admits a minimal pseudocompact topology";
    if (weight) claim += " of weight " + weight->str();
    const Cardinal& c = r_.continuum();
    if (!r_.is_infinite(k)) return close(Truth::Refutable, {}, "van-douwen", said(Truth::Refutable, claim));
    if (auto p = r_.prove_lt(k, c)) return close(Truth::Refutable, {&*p}, "van-douwen", said(Truth::Refutable, claim));
    if (auto p = r_.prove_lt(k, Cardinal::exp2(aleph1())))
        return close(Truth::Refutable, {&*p}, "metrization", said(Truth::Refutable, claim));

    if (weight) {
        if (!r_.is_infinite(*weight))
            return close(Truth::Refutable, {}, "minimal-pseudocompact-embedding", said(Truth::Refutable, claim));
        Verdict m = min_cond(k, *weight);
        Verdict p = m.refutable() ? Verdict{} : ps_cond(k, *weight);
        Verdict u = r_.leq(aleph1(), *weight);
        const Truth v = m.value && p.value && u.value;
        if (v == Truth::Refutable) {
            const Trace& why = m.refutable() ? m.trace : p.refutable() ? p.trace : u.trace;
            return close(v, {&why}, "minimal-pseudocompact-embedding", said(v, claim));
        }
        return close(v, {&m.trace, &p.trace, &u.trace}, "minimal-pseudocompact-embedding", said(v, claim));
    }

    if (auto ex = r_.is_exponential(k); ex.verdict.provable()) {
        Verdict u = r_.leq(aleph1(), *ex.base);
        if (u.provable())
            return close(Truth::Provable, {&ex.verdict.trace, &u.trace}, "minimal-pseudocompact-embedding", claim);
    }
    if (Verdict eq = r_.equal(k, c); eq.provable()) {
        Verdict l = lusin();
        return close(l.value, {&eq.trace, &l.trace}, "continuum-lusin", said(l.value, claim));
    }
    if (auto p = r_.prove_lt(c, k)) {
        Verdict mi = admits_minimal(k, std::nullopt);
        Verdict ps = mi.refutable() ? Verdict{} : admits_pseudocompact(k, std::nullopt);
        const Truth v = mi.value && ps.value;
        if (v == Truth::Refutable)
            return close(v, {&*p, mi.refutable() ? &mi.trace : &ps.trace}, "mps-equivalence", said(v, claim));
        return close(v, {&*p, &mi.trace, &ps.trace}, "mps-equivalence", said(v, claim));
    }
    return close(Truth::Unknown, {}, "mps-equivalence", said(Truth::Unknown, claim));
}

Verdict Engine::admits_connected(const Cardinal& k, bool pseudocompact, const std::optional<Cardinal>& weight) {
    std::string claim = "F_" + k.str() + " admits a connected minimal" + (pseudocompact ? " pseudocompact" : "") + " topology";
    if (weight) claim += " of weight " + weight->str();
    const Cardinal& c = r_.continuum();
    if (!r_.is_infinite(k)) return close(Truth::Refutable, {}, "connected-size", said(Truth::Refutable, claim));
    if (auto p = r_.prove_lt(k, c)) return close(Truth::Refutable, {&*p}, "connected-size", said(Truth::Refutable, claim));

    auto ex = r_.is_exponential(k);
    if (ex.verdict.refutable())
        return close(Truth::Refutable, {&ex.verdict.trace}, "connected-weight", said(Truth::Refutable, claim));
    if (weight) {
        if (!r_.is_infinite(*weight)) return close(Truth::Refutable, {}, "connected-weight", said(Truth::Refutable, claim));
        Verdict eq = r_.equal(k, Cardinal::exp2(*weight));
        if (eq.refutable()) return close(Truth::Refutable, {&eq.trace}, "connected-weight", said(Truth::Refutable, claim));
    }

    // k = 2^s with s >= aleph_1 needs no comparison with 2^w.
    const Cardinal base = weight ? *weight : ex.base.value_or(k);
    if (weight || ex.verdict.provable()) {
        Verdict eq = r_.equal(k, Cardinal::exp2(base));
        Verdict u = r_.leq(aleph1(), base);
        if (eq.provable() && u.provable()) return close(Truth::Provable, {&eq.trace, &u.trace}, "connected-embedding", claim);
    }

    if (Verdict eq = r_.equal(k, c); eq.provable()) {
        Verdict l = lusin();
        if (weight) {
            Verdict u = r_.leq(aleph1(), *weight);
            Verdict e2 = r_.equal(k, Cardinal::exp2(*weight));
            const Truth v = l.value && u.value && e2.value;
            if (v == Truth::Refutable)
                return close(v, {l.refutable() ? &l.trace : u.refutable() ? &u.trace : &e2.trace}, "continuum-lusin",
                             said(v, claim));
            if (v == Truth::Provable || pseudocompact)
                return close(v, {&l.trace, &u.trace, &e2.trace}, "continuum-lusin", said(v, claim));
            return close(Truth::Unknown, {&l.trace}, "continuum-lusin", said(Truth::Unknown, claim));
        }
        if (pseudocompact || l.provable()) return close(l.value, {&eq.trace, &l.trace}, "continuum-lusin", said(l.value, claim));
        return close(Truth::Unknown, {&l.trace}, "continuum-lusin", said(Truth::Unknown, claim));
    }
    if (auto p = r_.prove_lt(c, k)) {
        if (weight) {
            Verdict eq = r_.equal(k, Cardinal::exp2(*weight));
            return close(eq.value, {&*p, &eq.trace}, "connected-exponential", said(eq.value, claim));
        }
        return close(ex.verdict.value, {&*p, &ex.verdict.trace}, "connected-exponential", said(ex.verdict.value, claim));
    }
    return close(Truth::Unknown, {}, "connected-exponential", said(Truth::Unknown, claim));
}

Verdict Engine::admits(const TopologyQuery& q) {
    const Cardinal k = r_.normalize(q.kappa);
    if (k == Cardinal::fin(0)) throw TrivialGroupError();
    switch (q.clazz) {
        case TopologyClass::Minimal: return admits_minimal(k, q.weight);
        case TopologyClass::Pseudocompact: return admits_pseudocompact(k, q.weight);
        case TopologyClass::MinimalPseudocompact:
        case TopologyClass::ZeroDimMinimalPseudocompact: return admits_minimal_pseudocompact(k, q.weight);
        case TopologyClass::ConnectedMinimal: return admits_connected(k, false, q.weight);
        case TopologyClass::ConnectedMinimalPseudocompact: return admits_connected(k, true, q.weight);
        default:
            return close(Truth::Refutable, {}, "no-locally-connected",
                         "F_" + k.str() + " admits no locally connected minimal topology");
    }
}

// ---------------------------------------------------------------------------
// Weights and witnesses

WeightSpectrum Engine::weight_spectrum(const Cardinal& kappa) {
    const Cardinal k = r_.normalize(kappa);
    require_infinite(r_, k, "weight_spectrum");
    WeightSpectrum out;
    auto ex = r_.is_exponential(k);
    out.exponential = ex.verdict;
    Estimate lg = r_.log_card(k);
    std::optional<Cofinality> cf_log;
    if (lg.exact) cf_log = r_.cofinality(*lg.exact).value;

    auto add = [&](const Cardinal& s) {
        for (const auto& m : out.members)
            if (m.sigma == r_.normalize(s)) return;
        out.members.push_back({r_.normalize(s), min_cond(k, s)});
    };

    if (ex.verdict.provable()) {
        add(*ex.base);
        if (lg.exact && cf_log == Cofinality::Omega) add(*lg.exact);
        out.description = "{s : 2^s = " + k.str() + "} = {" + ex.base->str() +
                          "} up to equality, plus any s with cf(s) = w and 2^<s <= " + k.str() + " <= 2^s";
    } else if (ex.verdict.refutable() && lg.exact && cf_log != Cofinality::Unknown) {
        out.complete = true;
        if (cf_log == Cofinality::Omega) {
            add(*lg.exact);
            out.description = "{" + lg.exact->str() + "}";
        } else {
            out.description = "empty: " + k.str() + " is not exponential and cf(log " + k.str() + ") > w";
        }
    } else {
        if (lg.exact && cf_log == Cofinality::Omega) add(*lg.exact);
        out.description = "undecided: exponentiality of " + k.str() + " or cf(log " + k.str() + ") is open";
    }
    return out;
}

WitnessSeq Engine::witness_min(const Cardinal& kappa, const Cardinal& sigma) {
    Verdict v = min_cond(kappa, sigma);
    if (!v.provable())
        throw std::runtime_error("no witness constructed: " + q_text("Min", kappa, sigma) + " is " +
                                 std::string(to_string(v.value)));
    WitnessSeq w;
    w.kappa = r_.normalize(kappa);
    w.sigma = r_.normalize(sigma);
    const bool aleph = w.sigma.is(K::Aleph), beth = w.sigma.is(K::Beth);
    const bool along = (aleph || beth) && !w.sigma.index().is_omega_one() && w.sigma.index().is_limit();
    // The cofinal chain is the more informative witness whenever it works.
    if (along && r_.leq(Cardinal::weak_pow(w.sigma), w.kappa).provable()) {
        w.kind = aleph ? WitnessSeq::Kind::AlephsAlong : WitnessSeq::Kind::BethsAlong;
        w.limit = w.sigma.index().ordinal();
        return w;
    }
    if (r_.equal(w.kappa, Cardinal::exp2(w.sigma)).provable()) {
        w.kind = WitnessSeq::Kind::Constant;
        return w;
    }
    if (w.sigma == aleph0()) {
        w.kind = WitnessSeq::Kind::Finite;
        return w;
    }
    throw std::runtime_error("no witness constructed: no cofinal sequence is known for " + w.sigma.str());
}

Verdict Engine::verify_witness(const WitnessSeq& w) {
    constexpr std::uint64_t kPrefix = 6;
    const std::string claim = "witness " + w.describe() + " for " + q_text("Min", w.kappa, w.sigma);
    Trace tr;
    auto need = [&](Verdict v) {
        append(tr, v.trace);
        return v.value;
    };

    Truth ok = need(r_.leq(w.kappa, Cardinal::exp2(w.sigma)));
    switch (w.kind) {
        case WitnessSeq::Kind::Constant:
            ok = ok && need(r_.leq(Cardinal::exp2(w.sigma), w.kappa));
            break;
        case WitnessSeq::Kind::Finite:
            ok = ok && (w.sigma == aleph0() ? Truth::Provable : Truth::Refutable);
            break;
        default: {
            const bool aleph = w.kind == WitnessSeq::Kind::AlephsAlong;
            const Cardinal top = aleph ? Cardinal::aleph(*w.limit) : Cardinal::beth(*w.limit);
            const bool sup_ok = classify(*w.limit) == OrdinalKind::Limit && r_.normalize(top) == w.sigma;
            ok = ok && (sup_ok ? Truth::Provable : Truth::Refutable);
            ok = ok && need(r_.leq(Cardinal::weak_pow(w.sigma), w.kappa));
            for (std::uint64_t n = 0; n < kPrefix; ++n) {
                const Cardinal e = w.element(n);
                ok = ok && need(r_.less(e, w.sigma));
                ok = ok && need(r_.leq(Cardinal::exp2(e), w.kappa));
            }
        }
    }
    tr.push_back(make_step("witness-check", said(ok, claim)));
    return {ok, std::move(tr)};
}

// ---------------------------------------------------------------------------

Verdict min_cond(const Cardinal& kappa, const Cardinal& sigma, const AxiomContext& ctx) {
    return Engine(ctx).min_cond(kappa, sigma);
}
Verdict is_stoyanov(const Cardinal& kappa, const AxiomContext& ctx) { return Engine(ctx).is_stoyanov(kappa); }
Verdict ps_cond(const Cardinal& kappa, const Cardinal& sigma, const AxiomContext& ctx) {
    return Engine(ctx).ps_cond(kappa, sigma);
}
Verdict admits(const TopologyQuery& q, const AxiomContext& ctx) { return Engine(ctx).admits(q); }
WeightSpectrum weight_spectrum(const Cardinal& kappa, const AxiomContext& ctx) {
    return Engine(ctx).weight_spectrum(kappa);
}
WitnessSeq witness_min(const Cardinal& kappa, const Cardinal& sigma, const AxiomContext& ctx) {
    return Engine(ctx).witness_min(kappa, sigma);
}

}  // namespace stoyanov
