#include "stoyanov/reasoner.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace stoyanov {

namespace {

constexpr int kMaxProofDepth = 16;
constexpr int kMaxNormalizeDepth = 48;

Cardinal aleph_n(std::uint64_t n) { return Cardinal::aleph(Ordinal::finite(n)); }

std::string le_text(const Cardinal& a, const Cardinal& b) { return a.str() + " <= " + b.str(); }
std::string lt_text(const Cardinal& a, const Cardinal& b) { return a.str() + " < " + b.str(); }

/// Concatenates the sub-proofs and closes them with one step.
Trace conclude(std::initializer_list<const Trace*> parts, std::string_view rule_name, std::string conclusion) {
    Trace out;
    std::vector<std::string> premises;
    for (const Trace* p : parts) {
        append(out, *p);
        if (!p->empty()) premises.push_back(p->back().conclusion);
    }
    out.push_back(make_step(rule_name, std::move(conclusion), std::move(premises)));
    return out;
}

std::uint64_t checked_pow2(std::uint64_t n) {
    if (n >= 64) throw std::overflow_error("2^" + std::to_string(n) + " does not fit in 64 bits");
    return std::uint64_t{1} << n;
}

}  // namespace

std::string to_string(Cofinality c) {
    switch (c) {
        case Cofinality::Omega: return "omega";
        case Cofinality::Uncountable: return "uncountable";
        default: return "unknown";
    }
}

Reasoner::Reasoner(AxiomContext ctx, std::optional<std::uint64_t> rule_order_seed)
    : ctx_(std::move(ctx)), continuum_(Cardinal::continuum()) {
    le_rules_ = {&Reasoner::le_refl,       &Reasoner::le_finite,         &Reasoner::le_sup_left,
                 &Reasoner::le_sup_right,  &Reasoner::le_index,          &Reasoner::le_aleph_zero,
                 &Reasoner::le_aleph_successor, &Reasoner::le_below_exp, &Reasoner::le_exp_above,
                 &Reasoner::le_pow_left,   &Reasoner::le_pow_right,      &Reasoner::le_weak_left,
                 &Reasoner::le_weak_right};
    lt_rules_ = {&Reasoner::lt_finite,   &Reasoner::lt_sup_left,  &Reasoner::lt_sup_right,
                 &Reasoner::lt_index,    &Reasoner::lt_successor_bound, &Reasoner::lt_below_exp,
                 &Reasoner::lt_exp_below, &Reasoner::lt_pow,      &Reasoner::lt_weak};
    if (rule_order_seed) {
        std::mt19937_64 rng(*rule_order_seed);
        std::shuffle(le_rules_.begin(), le_rules_.end(), rng);
        std::shuffle(lt_rules_.begin(), lt_rules_.end(), rng);
    }

    // Equalities are normalized before any context rewriting is enabled; the
    // caches built meanwhile are discarded.
    for (const auto& e : ctx_.effective_equalities())
        equalities_.push_back({normalize(e.argument), normalize(e.value)});
    equalities_ready_ = true;
    norm_memo_.clear();
    proof_memo_.clear();
    continuum_ = normalize(Cardinal::continuum());
}

const std::vector<Reasoner::NormalEquality>& Reasoner::equalities() {
    static const std::vector<NormalEquality> none;
    return equalities_ready_ ? equalities_ : none;
}

bool Reasoner::gch() const { return ctx_.has(Assumption::GCH); }

bool Reasoner::strong_limit_atom(const Cardinal& t) const {
    if (t.is(Cardinal::Kind::Aleph)) return t.index().is_zero() || (gch() && t.index().is_limit());
    if (t.is(Cardinal::Kind::Beth)) return t.index().is_limit() || t.index().is_zero();
    return false;
}

bool Reasoner::is_infinite(const Cardinal& t) { return !normalize(t).is(Cardinal::Kind::Fin); }

// ---------------------------------------------------------------------------
// Normalization

Cardinal Reasoner::normalize(const Cardinal& t) {
    if (auto it = norm_memo_.find(t.str()); it != norm_memo_.end()) return it->second;
    if (norm_active_.count(t.str()) || norm_depth_ >= kMaxNormalizeDepth) {
        ++truncations_;
        return t;
    }
    norm_active_.insert(t.str());
    ++norm_depth_;
    const auto before = truncations_;
    Cardinal out = t;
    try {
        out = normalize_node(t);
    } catch (...) {
        --norm_depth_;
        norm_active_.erase(t.str());
        throw;
    }
    --norm_depth_;
    norm_active_.erase(t.str());
    if (truncations_ == before) {
        norm_memo_.emplace(t.str(), out);
        norm_memo_.emplace(out.str(), out);
    }
    return out;
}

Cardinal Reasoner::normalize_node(const Cardinal& t) {
    using K = Cardinal::Kind;
    switch (t.kind()) {
        case K::Fin:
        case K::Aleph: return t;

        case K::Beth: {
            const auto& i = t.index();
            if (i.is_zero()) return Cardinal::aleph(i);
            if (gch()) return Cardinal::aleph(i);
            if (i.is_successor()) return normalize(Cardinal::exp2(Cardinal::beth(predecessor(i.ordinal()))));
            return t;
        }

        case K::Exp2: {
            const Cardinal x = normalize(t.arg());
            if (x.is(K::Fin)) return Cardinal::fin(checked_pow2(x.fin_value()));
            if (x.is(K::Sup)) {
                std::vector<Cardinal> items;
                for (const auto& i : x.items()) items.push_back(Cardinal::exp2(i));
                return normalize_sup(std::move(items));
            }
            if (gch() && x.is(K::Aleph) && !x.index().is_omega_one())
                return Cardinal::aleph(successor(x.index().ordinal()));
            if (auto v = pinned_exp(x)) return normalize(*v);
            return Cardinal::exp2(x);
        }

        case K::PowOmega: {
            const Cardinal x = normalize(t.arg());
            if (x.is(K::Fin)) return x.fin_value() <= 1 ? x : continuum_;
            if (x.is(K::Sup)) {
                std::vector<Cardinal> items;
                for (const auto& i : x.items()) items.push_back(Cardinal::pow_omega(i));
                return normalize_sup(std::move(items));
            }
            if (x.is(K::PowOmega) || x.is(K::Exp2)) return x;
            if (x.is(K::Aleph)) {
                const auto& i = x.index();
                if (i.is_zero()) return normalize(Cardinal::continuum());
                if (gch()) {
                    if (i.is_successor() || i.is_omega_one()) return x;
                    return Cardinal::aleph(successor(i.ordinal()));
                }
                if (i.is_successor())
                    return normalize_sup({x, Cardinal::pow_omega(Cardinal::aleph(predecessor(i.ordinal())))});
                return Cardinal::pow_omega(x);
            }
            if (x.is(K::Beth)) {
                if (x.index().is_omega_one()) return x;
                return normalize(Cardinal::exp2(x));
            }
            return Cardinal::pow_omega(x);
        }

        case K::WeakPow: {
            const Cardinal x = normalize(t.arg());
            if (x.is(K::Fin)) {
                const auto n = x.fin_value();
                return Cardinal::fin(n == 0 ? 0 : checked_pow2(n - 1));
            }
            if (x.is(K::Sup)) {
                std::vector<Cardinal> items;
                for (const auto& i : x.items()) items.push_back(Cardinal::weak_pow(i));
                return normalize_sup(std::move(items));
            }
            if (x.is(K::Aleph)) {
                const auto& i = x.index();
                if (i.is_zero()) return x;
                if (i.is_successor()) return normalize(Cardinal::exp2(Cardinal::aleph(predecessor(i.ordinal()))));
                if (gch()) return x;
            }
            if (x.is(K::Beth)) return x;
            if (auto v = pinned_weak_pow(x)) return normalize(*v);
            return Cardinal::weak_pow(x);
        }

        case K::Sup: return normalize_sup(t.items());
    }
    return t;
}

Cardinal Reasoner::normalize_sup(std::vector<Cardinal> raw) {
    std::vector<Cardinal> flat;
    for (const auto& r : raw) {
        Cardinal n = normalize(r);
        if (n.is(Cardinal::Kind::Sup))
            flat.insert(flat.end(), n.items().begin(), n.items().end());
        else
            flat.push_back(std::move(n));
    }
    std::uint64_t finite_max = 0;
    bool any_finite = false;
    std::vector<Cardinal> inf;
    for (auto& c : flat) {
        if (c.is(Cardinal::Kind::Fin)) {
            any_finite = true;
            finite_max = std::max(finite_max, c.fin_value());
        } else {
            inf.push_back(std::move(c));
        }
    }
    if (inf.empty()) return Cardinal::fin(any_finite ? finite_max : 0);
    std::sort(inf.begin(), inf.end());
    inf.erase(std::unique(inf.begin(), inf.end()), inf.end());

    std::vector<Cardinal> kept;
    for (std::size_t i = 0; i < inf.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < inf.size() && !dominated; ++j) {
            if (i == j) continue;
            if (prove_le(inf[i], inf[j]) && (j < i || !prove_le(inf[j], inf[i]))) dominated = true;
        }
        if (!dominated) kept.push_back(inf[i]);
    }
    if (kept.empty()) kept.push_back(inf.front());
    if (kept.size() == 1) return kept.front();
    return Cardinal::sup(std::move(kept));
}

std::optional<Cardinal> Reasoner::pinned_exp(const Cardinal& base) {
    const auto& eqs = equalities();
    if (eqs.empty()) return std::nullopt;
    std::vector<const NormalEquality*> low, high;
    for (const auto& e : eqs) {
        if (prove_le(e.argument, base)) low.push_back(&e);
        if (prove_le(base, e.argument)) high.push_back(&e);
    }
    for (const auto* h : high)
        for (const auto* l : low)
            if (prove_le(h->value, l->value)) return h->value;
    return std::nullopt;
}

std::optional<Cardinal> Reasoner::pinned_weak_pow(const Cardinal& base) {
    const auto& eqs = equalities();
    if (eqs.empty()) return std::nullopt;
    std::vector<const NormalEquality*> low, high;
    for (const auto& e : eqs) {
        if (prove_lt(e.argument, base)) low.push_back(&e);
        if (prove_le(base, e.argument)) high.push_back(&e);
    }
    for (const auto* h : high)
        for (const auto* l : low)
            if (prove_le(h->value, l->value)) return h->value;
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Proof search

std::optional<Trace> Reasoner::prove_le(const Cardinal& a, const Cardinal& b) { return prove(false, a, b); }
std::optional<Trace> Reasoner::prove_lt(const Cardinal& a, const Cardinal& b) { return prove(true, a, b); }

std::optional<Trace> Reasoner::prove(bool strict, const Cardinal& a0, const Cardinal& b0) {
    const Cardinal a = normalize(a0);
    const Cardinal b = normalize(b0);
    std::string key = (strict ? "<" : "<=") + a.str() + "|" + b.str();
    if (auto it = proof_memo_.find(key); it != proof_memo_.end()) return it->second;
    if (proof_active_.count(key) || proof_depth_ >= kMaxProofDepth) {
        ++truncations_;
        return std::nullopt;
    }
    proof_active_.insert(key);
    ++proof_depth_;
    const auto before = truncations_;
    std::optional<Trace> result;
    try {
        for (Rule r : strict ? lt_rules_ : le_rules_) {
            result = (this->*r)(a, b);
            if (result) break;
        }
    } catch (...) {
        --proof_depth_;
        proof_active_.erase(key);
        throw;
    }
    --proof_depth_;
    proof_active_.erase(key);
    if (result || truncations_ == before) proof_memo_.emplace(std::move(key), result);
    return result;
}

using K = Cardinal::Kind;

std::optional<Trace> Reasoner::le_refl(const Cardinal& a, const Cardinal& b) {
    if (a == b) return conclude({}, "reflexivity", le_text(a, b));
    return std::nullopt;
}

std::optional<Trace> Reasoner::le_finite(const Cardinal& a, const Cardinal& b) {
    if (!a.is(K::Fin)) return std::nullopt;
    if (b.is(K::Fin)) {
        if (a.fin_value() <= b.fin_value()) return conclude({}, "finite-arithmetic", le_text(a, b));
        return std::nullopt;
    }
    return conclude({}, "finite-below-infinite", le_text(a, b));
}

std::optional<Trace> Reasoner::le_sup_left(const Cardinal& a, const Cardinal& b) {
    if (!a.is(K::Sup)) return std::nullopt;
    Trace out;
    std::vector<std::string> premises;
    for (const auto& i : a.items()) {
        auto p = prove_le(i, b);
        if (!p) return std::nullopt;
        append(out, *p);
        premises.push_back(p->back().conclusion);
    }
    out.push_back(make_step("sup-max", le_text(a, b), std::move(premises)));
    return out;
}

std::optional<Trace> Reasoner::le_sup_right(const Cardinal& a, const Cardinal& b) {
    if (!b.is(K::Sup)) return std::nullopt;
    for (const auto& i : b.items())
        if (auto p = prove_le(a, i)) return conclude({&*p}, "sup-max", le_text(a, b));
    return std::nullopt;
}

std::optional<Trace> Reasoner::le_index(const Cardinal& a, const Cardinal& b) {
    const bool aa = a.is(K::Aleph), ab = a.is(K::Beth), ba = b.is(K::Aleph), bb = b.is(K::Beth);
    if (aa && ba && a.index() <= b.index()) return conclude({}, "aleph-index", le_text(a, b));
    if (aa && bb && a.index() <= b.index()) return conclude({}, "aleph-below-beth", le_text(a, b));
    if (ab && bb && a.index() <= b.index()) return conclude({}, "beth-index", le_text(a, b));
    return std::nullopt;
}

std::optional<Trace> Reasoner::le_aleph_zero(const Cardinal& a, const Cardinal& b) {
    if (a.is(K::Aleph) && a.index().is_zero() && !b.is(K::Fin))
        return conclude({}, "aleph-zero-least", le_text(a, b));
    return std::nullopt;
}

std::optional<Trace> Reasoner::le_aleph_successor(const Cardinal& a, const Cardinal& b) {
    if (!a.is(K::Aleph) || !a.index().is_successor()) return std::nullopt;
    if (auto p = prove_lt(Cardinal::aleph(predecessor(a.index().ordinal())), b))
        return conclude({&*p}, "aleph-successor", le_text(a, b));
    return std::nullopt;
}

std::optional<Trace> Reasoner::le_below_exp(const Cardinal& a, const Cardinal& b) {
    if (!b.is(K::Exp2)) return std::nullopt;
    const Cardinal& y = b.arg();
    if (auto p = prove_le(a, y)) return conclude({&*p}, "cantor", le_text(a, b));
    if (a.is(K::Exp2))
        if (auto p = prove_le(a.arg(), y)) return conclude({&*p}, "exp-monotone", le_text(a, b));
    for (const auto& e : equalities()) {
        auto p = prove_le(e.argument, y);
        if (!p) continue;
        if (auto q = prove_le(a, e.value)) return conclude({&*p, &*q}, "context-equality", le_text(a, b));
    }
    if (ctx_.has(Assumption::NotCH))
        if (auto p = prove_le(a, aleph_n(2))) return conclude({&*p}, "not-ch", le_text(a, b));
    return std::nullopt;
}

/// a is the pinned value of some 2^x with x < b, and b is a strong limit.
std::optional<Trace> Reasoner::pinned_below_strong_limit(const Cardinal& a, const Cardinal& b) {
    if (a.is(K::Exp2) || a.is(K::Fin) || !strong_limit_atom(b)) return std::nullopt;
    for (const auto& e : equalities()) {
        if (e.value != a) continue;
        if (auto p = prove_lt(e.argument, b)) {
            p->push_back(make_step("context-equality", "2^" + e.argument.str() + " = " + a.str()));
            return p;
        }
    }
    return std::nullopt;
}

std::optional<Trace> Reasoner::le_exp_above(const Cardinal& a, const Cardinal& b) {
    if (auto p = pinned_below_strong_limit(a, b)) return conclude({&*p}, "strong-limit-bound", le_text(a, b));
    if (!a.is(K::Exp2)) return std::nullopt;
    const Cardinal& x = a.arg();
    for (const auto& e : equalities()) {
        auto p = prove_le(x, e.argument);
        if (!p) continue;
        if (auto q = prove_le(e.value, b)) return conclude({&*p, &*q}, "context-equality", le_text(a, b));
    }
    if (strong_limit_atom(b))
        if (auto p = prove_lt(x, b)) return conclude({&*p}, "strong-limit-bound", le_text(a, b));
    return std::nullopt;
}

std::optional<Trace> Reasoner::le_pow_left(const Cardinal& a, const Cardinal& b) {
    if (!a.is(K::PowOmega)) return std::nullopt;
    if (auto p = prove_le(Cardinal::exp2(a.arg()), b)) return conclude({&*p}, "pow-omega-bounds", le_text(a, b));
    if (b.is(K::PowOmega))
        if (auto p = prove_le(a.arg(), b.arg())) return conclude({&*p}, "pow-omega-bounds", le_text(a, b));
    return std::nullopt;
}

std::optional<Trace> Reasoner::le_pow_right(const Cardinal& a, const Cardinal& b) {
    if (!b.is(K::PowOmega)) return std::nullopt;
    if (auto p = prove_le(a, b.arg())) return conclude({&*p}, "pow-omega-bounds", le_text(a, b));
    if (auto p = prove_le(a, continuum_)) return conclude({&*p}, "pow-omega-bounds", le_text(a, b));
    return std::nullopt;
}

std::optional<Trace> Reasoner::le_weak_left(const Cardinal& a, const Cardinal& b) {
    if (!a.is(K::WeakPow)) return std::nullopt;
    const Cardinal& x = a.arg();
    if (auto p = prove_le(Cardinal::exp2(x), b)) return conclude({&*p}, "weak-power-bounds", le_text(a, b));
    if (b.is(K::WeakPow))
        if (auto p = prove_le(x, b.arg())) return conclude({&*p}, "weak-power-bounds", le_text(a, b));
    for (const auto& e : equalities()) {
        auto p = prove_le(x, e.argument);
        if (!p) continue;
        if (auto q = prove_le(e.value, b)) return conclude({&*p, &*q}, "context-equality", le_text(a, b));
    }
    if (strong_limit_atom(b))
        if (auto p = prove_le(x, b)) return conclude({&*p}, "strong-limit-bound", le_text(a, b));
    return std::nullopt;
}

std::optional<Trace> Reasoner::le_weak_right(const Cardinal& a, const Cardinal& b) {
    if (!b.is(K::WeakPow)) return std::nullopt;
    const Cardinal& y = b.arg();
    if (auto p = prove_le(a, y)) return conclude({&*p}, "weak-power-bounds", le_text(a, b));
    if (a.is(K::Exp2))
        if (auto p = prove_lt(a.arg(), y)) return conclude({&*p}, "weak-power-bounds", le_text(a, b));
    for (const auto& e : equalities()) {
        auto p = prove_lt(e.argument, y);
        if (!p) continue;
        if (auto q = prove_le(a, e.value)) return conclude({&*p, &*q}, "context-equality", le_text(a, b));
    }
    return std::nullopt;
}

std::optional<Trace> Reasoner::lt_finite(const Cardinal& a, const Cardinal& b) {
    if (!a.is(K::Fin)) return std::nullopt;
    if (b.is(K::Fin)) {
        if (a.fin_value() < b.fin_value()) return conclude({}, "finite-arithmetic", lt_text(a, b));
        return std::nullopt;
    }
    return conclude({}, "finite-below-infinite", lt_text(a, b));
}

std::optional<Trace> Reasoner::lt_sup_left(const Cardinal& a, const Cardinal& b) {
    if (!a.is(K::Sup)) return std::nullopt;
    Trace out;
    std::vector<std::string> premises;
    for (const auto& i : a.items()) {
        auto p = prove_lt(i, b);
        if (!p) return std::nullopt;
        append(out, *p);
        premises.push_back(p->back().conclusion);
    }
    out.push_back(make_step("sup-max", lt_text(a, b), std::move(premises)));
    return out;
}

std::optional<Trace> Reasoner::lt_sup_right(const Cardinal& a, const Cardinal& b) {
    if (!b.is(K::Sup)) return std::nullopt;
    for (const auto& i : b.items())
        if (auto p = prove_lt(a, i)) return conclude({&*p}, "sup-max", lt_text(a, b));
    return std::nullopt;
}

std::optional<Trace> Reasoner::lt_index(const Cardinal& a, const Cardinal& b) {
    const bool aa = a.is(K::Aleph), ab = a.is(K::Beth), ba = b.is(K::Aleph), bb = b.is(K::Beth);
    if (aa && ba && a.index() < b.index()) return conclude({}, "aleph-index", lt_text(a, b));
    if (aa && bb && a.index() < b.index()) return conclude({}, "aleph-below-beth", lt_text(a, b));
    if (ab && bb && a.index() < b.index()) return conclude({}, "beth-index", lt_text(a, b));
    return std::nullopt;
}

std::optional<Trace> Reasoner::lt_successor_bound(const Cardinal& a, const Cardinal& b) {
    if (!b.is(K::Aleph) || !b.index().is_successor()) return std::nullopt;
    if (auto p = prove_le(a, Cardinal::aleph(predecessor(b.index().ordinal()))))
        return conclude({&*p}, "aleph-successor", lt_text(a, b));
    return std::nullopt;
}

std::optional<Trace> Reasoner::lt_below_exp(const Cardinal& a, const Cardinal& b) {
    if (!b.is(K::Exp2)) return std::nullopt;
    const Cardinal& y = b.arg();
    if (auto p = prove_le(a, y)) return conclude({&*p}, "cantor", lt_text(a, b));
    for (const auto& e : equalities()) {
        auto p = prove_le(e.argument, y);
        if (!p) continue;
        if (auto q = prove_lt(a, e.value)) return conclude({&*p, &*q}, "context-equality", lt_text(a, b));
    }
    if (ctx_.has(Assumption::NotCH))
        if (auto p = prove_le(a, aleph_n(1))) return conclude({&*p}, "not-ch", lt_text(a, b));
    if (!a.is(K::Fin)) {
        auto cf = cofinality(a);
        if (cf.value == Cofinality::Omega)
            if (auto p = prove_le(a, b)) return conclude({&cf.trace, &*p}, "koenig", lt_text(a, b));
    }
    return std::nullopt;
}

std::optional<Trace> Reasoner::lt_exp_below(const Cardinal& a, const Cardinal& b) {
    if (auto p = pinned_below_strong_limit(a, b)) return conclude({&*p}, "strong-limit-bound", lt_text(a, b));
    if (!a.is(K::Exp2)) return std::nullopt;
    const Cardinal& x = a.arg();
    for (const auto& e : equalities()) {
        auto p = prove_le(x, e.argument);
        if (!p) continue;
        if (auto q = prove_lt(e.value, b)) return conclude({&*p, &*q}, "context-equality", lt_text(a, b));
    }
    if (strong_limit_atom(b))
        if (auto p = prove_lt(x, b)) return conclude({&*p}, "strong-limit-bound", lt_text(a, b));
    return std::nullopt;
}

std::optional<Trace> Reasoner::lt_pow(const Cardinal& a, const Cardinal& b) {
    if (a.is(K::PowOmega))
        if (auto p = prove_lt(Cardinal::exp2(a.arg()), b)) return conclude({&*p}, "pow-omega-bounds", lt_text(a, b));
    if (b.is(K::PowOmega)) {
        const Cardinal& y = b.arg();
        auto cf = cofinality(y);
        if (cf.value == Cofinality::Omega)
            if (auto p = prove_le(a, y)) return conclude({&cf.trace, &*p}, "koenig-power", lt_text(a, b));
        if (auto p = prove_lt(a, continuum_)) return conclude({&*p}, "pow-omega-bounds", lt_text(a, b));
    }
    return std::nullopt;
}

std::optional<Trace> Reasoner::lt_weak(const Cardinal& a, const Cardinal& b) {
    if (a.is(K::WeakPow)) {
        const Cardinal& x = a.arg();
        if (auto p = prove_lt(Cardinal::exp2(x), b)) return conclude({&*p}, "weak-power-bounds", lt_text(a, b));
        if (strong_limit_atom(b))
            if (auto p = prove_lt(x, b)) return conclude({&*p}, "strong-limit-bound", lt_text(a, b));
        for (const auto& e : equalities()) {
            auto p = prove_le(x, e.argument);
            if (!p) continue;
            if (auto q = prove_lt(e.value, b)) return conclude({&*p, &*q}, "context-equality", lt_text(a, b));
        }
    }
    if (b.is(K::WeakPow)) {
        const Cardinal& y = b.arg();
        if (auto p = prove_lt(a, y)) return conclude({&*p}, "weak-power-bounds", lt_text(a, b));
        for (const auto& e : equalities()) {
            auto p = prove_lt(e.argument, y);
            if (!p) continue;
            if (auto q = prove_lt(a, e.value)) return conclude({&*p, &*q}, "context-equality", lt_text(a, b));
        }
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Three-valued comparisons

Verdict Reasoner::leq(const Cardinal& a0, const Cardinal& b0) {
    const Cardinal a = normalize(a0), b = normalize(b0);
    if (auto p = prove_le(a, b)) return {Truth::Provable, std::move(*p)};
    if (auto p = prove_lt(b, a)) return {Truth::Refutable, std::move(*p)};
    return {Truth::Unknown, {make_step("undecided", le_text(a, b))}};
}

Verdict Reasoner::less(const Cardinal& a0, const Cardinal& b0) {
    const Cardinal a = normalize(a0), b = normalize(b0);
    if (auto p = prove_lt(a, b)) return {Truth::Provable, std::move(*p)};
    if (auto p = prove_le(b, a)) return {Truth::Refutable, std::move(*p)};
    return {Truth::Unknown, {make_step("undecided", lt_text(a, b))}};
}

Verdict Reasoner::equal(const Cardinal& a0, const Cardinal& b0) {
    const Cardinal a = normalize(a0), b = normalize(b0);
    auto ab = prove_le(a, b);
    auto ba = ab ? prove_le(b, a) : std::nullopt;
    if (ab && ba) {
        Trace t = conclude({&*ab, &*ba}, "reflexivity", a.str() + " = " + b.str());
        return {Truth::Provable, std::move(t)};
    }
    if (auto p = prove_lt(a, b)) return {Truth::Refutable, std::move(*p)};
    if (auto p = prove_lt(b, a)) return {Truth::Refutable, std::move(*p)};
    return {Truth::Unknown, {make_step("undecided", a.str() + " = " + b.str())}};
}

// ---------------------------------------------------------------------------
// Wrappers

Cardinal normalize(const Cardinal& t, const AxiomContext& ctx) { return Reasoner(ctx).normalize(t); }
Verdict leq(const Cardinal& a, const Cardinal& b, const AxiomContext& ctx) { return Reasoner(ctx).leq(a, b); }
CofinalityResult cofinality(const Cardinal& t, const AxiomContext& ctx) { return Reasoner(ctx).cofinality(t); }
Estimate log_card(const Cardinal& t, const AxiomContext& ctx) { return Reasoner(ctx).log_card(t); }
ExponentialResult is_exponential(const Cardinal& t, const AxiomContext& ctx) {
    return Reasoner(ctx).is_exponential(t);
}
Verdict is_strong_limit(const Cardinal& t, const AxiomContext& ctx) { return Reasoner(ctx).is_strong_limit(t); }
Estimate weak_power(const Cardinal& t, const AxiomContext& ctx) { return Reasoner(ctx).weak_power(t); }
Estimate m_bounds(const Cardinal& sigma, const AxiomContext& ctx) { return Reasoner(ctx).m_bounds(sigma); }

}  // namespace stoyanov
