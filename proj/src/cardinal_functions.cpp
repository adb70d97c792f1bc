#include <stdexcept>

#include "stoyanov/reasoner.hpp"

namespace stoyanov {

namespace {

using K = Cardinal::Kind;

void require_infinite(const Cardinal& n, const char* what) {
    if (n.is(K::Fin)) throw std::domain_error(std::string(what) + " needs an infinite cardinal, got " + n.str());
}

Estimate exact_estimate(Cardinal v, Trace trace) {
    Estimate e;
    e.exact = v;
    e.bounds = {v, false, v};
    e.trace = std::move(trace);
    return e;
}

}  // namespace

std::optional<Cardinal> Reasoner::max_item(const Cardinal& s) {
    if (!s.is(K::Sup)) return s;
    for (const auto& i : s.items()) {
        bool top = true;
        for (const auto& j : s.items())
            if (!(i == j) && !prove_le(j, i)) {
                top = false;
                break;
            }
        if (top) return i;
    }
    return std::nullopt;
}

CofinalityResult Reasoner::cofinality(const Cardinal& t) {
    const Cardinal n = normalize(t);
    require_infinite(n, "cofinality");
    auto answer = [&](Cofinality c, std::string_view rule_name) {
        return CofinalityResult{c, {make_step(rule_name, "cf(" + n.str() + ") = " + to_string(c))}};
    };
    switch (n.kind()) {
        case K::Aleph: {
            const auto& i = n.index();
            if (i.is_zero()) return answer(Cofinality::Omega, "cofinality");
            if (i.is_successor() || i.is_omega_one()) return answer(Cofinality::Uncountable, "cofinality");
            return answer(Cofinality::Omega, "cofinality");
        }
        case K::Beth:
            return answer(n.index().is_omega_one() ? Cofinality::Uncountable : Cofinality::Omega, "cofinality");
        case K::Exp2:
        case K::PowOmega: return answer(Cofinality::Uncountable, "koenig");
        case K::Sup: {
            if (auto m = max_item(n)) {
                auto r = cofinality(*m);
                r.trace.push_back(make_step("sup-max", "cf(" + n.str() + ") = cf(" + m->str() + ")"));
                return r;
            }
            std::optional<Cofinality> shared;
            for (const auto& i : n.items()) {
                auto c = cofinality(i).value;
                if (c == Cofinality::Unknown || (shared && *shared != c)) return {};
                shared = c;
            }
            return answer(*shared, "sup-max");
        }
        default: return {};
    }
}

Verdict Reasoner::is_strong_limit(const Cardinal& t) {
    const Cardinal n = normalize(t);
    require_infinite(n, "is_strong_limit");
    if (strong_limit_atom(n)) return {Truth::Provable, {make_step("strong-limit", n.str() + " is a strong limit")}};
    if (n.is(K::Sup))
        if (auto m = max_item(n)) {
            auto v = is_strong_limit(*m);
            v.trace.push_back(make_step("sup-max", n.str() + " = " + m->str()));
            return v;
        }

    std::vector<Cardinal> candidates{Cardinal::aleph(Ordinal::zero())};
    if (n.is(K::Exp2) || n.is(K::PowOmega) || n.is(K::WeakPow)) candidates.push_back(n.arg());
    if (n.is(K::Aleph) && n.index().is_successor())
        candidates.push_back(Cardinal::aleph(predecessor(n.index().ordinal())));
    for (const auto& e : equalities()) candidates.push_back(e.argument);

    for (const auto& mu : candidates) {
        auto below = prove_lt(mu, n);
        if (!below) continue;
        if (auto above = prove_le(n, Cardinal::exp2(mu))) {
            Trace tr = *below;
            append(tr, *above);
            tr.push_back(make_step("not-strong-limit",
                                   n.str() + " is not a strong limit: " + mu.str() + " < " + n.str() + " <= 2^" +
                                       mu.str()));
            return {Truth::Refutable, std::move(tr)};
        }
    }
    return {Truth::Unknown, {make_step("undecided", n.str() + " is a strong limit")}};
}

ExponentialResult Reasoner::is_exponential(const Cardinal& t) {
    const Cardinal n = normalize(t);
    if (n.is(K::Fin)) {
        const auto v = n.fin_value();
        if (v != 0 && (v & (v - 1)) == 0) {
            std::uint64_t e = 0;
            while ((std::uint64_t{1} << e) != v) ++e;
            return {{Truth::Provable, {make_step("finite-arithmetic", n.str() + " = 2^" + std::to_string(e))}},
                    Cardinal::fin(e)};
        }
        return {{Truth::Refutable, {make_step("finite-arithmetic", n.str() + " is not a power of 2")}}, std::nullopt};
    }
    if (n.is(K::Exp2))
        return {{Truth::Provable, {make_step("exponential", n.str() + " = 2^" + n.arg().str())}}, n.arg()};
    if (gch() && n.is(K::Aleph) && n.index().is_successor()) {
        Cardinal base = Cardinal::aleph(predecessor(n.index().ordinal()));
        return {{Truth::Provable, {make_step("gch", n.str() + " = 2^" + base.str())}}, base};
    }
    for (const auto& e : equalities()) {
        auto ab = prove_le(n, e.value);
        if (!ab) continue;
        auto ba = prove_le(e.value, n);
        if (!ba) continue;
        Trace tr = *ab;
        append(tr, *ba);
        tr.push_back(make_step("context-equality", n.str() + " = 2^" + e.argument.str()));
        tr.push_back(make_step("exponential", n.str() + " is exponential"));
        return {{Truth::Provable, std::move(tr)}, e.argument};
    }
    if (n.is(K::Sup))
        if (auto m = max_item(n)) {
            auto r = is_exponential(*m);
            r.verdict.trace.push_back(make_step("sup-max", n.str() + " = " + m->str()));
            return r;
        }

    auto sl = is_strong_limit(n);
    if (sl.provable()) {
        sl.trace.push_back(make_step("non-exponential-strong-limit", n.str() + " is not of the form 2^s"));
        return {{Truth::Refutable, std::move(sl.trace)}, std::nullopt};
    }
    auto cf = cofinality(n);
    if (cf.value == Cofinality::Omega) {
        cf.trace.push_back(make_step("non-exponential-koenig", n.str() + " is not of the form 2^s"));
        return {{Truth::Refutable, std::move(cf.trace)}, std::nullopt};
    }
    return {{Truth::Unknown, {make_step("undecided", n.str() + " is exponential")}}, std::nullopt};
}

Estimate Reasoner::log_card(const Cardinal& t) {
    const Cardinal n = normalize(t);
    require_infinite(n, "log_card");

    auto sl = is_strong_limit(n);
    if (sl.provable()) {
        sl.trace.push_back(make_step("log-strong-limit", "log " + n.str() + " = " + n.str()));
        return exact_estimate(n, std::move(sl.trace));
    }

    std::vector<Cardinal> candidates{Cardinal::aleph(Ordinal::zero()), n};
    auto add = [&](const Cardinal& c) {
        Cardinal k = normalize(c);
        if (k.is(K::Fin)) return;
        for (const auto& x : candidates)
            if (x == k) return;
        candidates.push_back(k);
    };
    if (auto ex = is_exponential(n); ex.verdict.provable()) add(*ex.base);
    if (n.is(K::PowOmega) || n.is(K::WeakPow) || n.is(K::Exp2)) add(n.arg());
    if (n.is(K::Aleph) && n.index().is_successor()) add(Cardinal::aleph(predecessor(n.index().ordinal())));
    if (n.is(K::Sup))
        for (const auto& i : n.items()) add(i);
    for (const auto& e : equalities()) add(e.argument);

    // Upper: smallest candidate u with n <= 2^u.
    std::vector<Cardinal> upper;
    for (const auto& c : candidates)
        if (prove_le(n, Cardinal::exp2(c))) upper.push_back(c);
    Cardinal up = n;
    for (const auto& u : upper) {
        bool minimal = true;
        for (const auto& v : upper)
            if (!(u == v) && !prove_le(u, v)) {
                minimal = false;
                break;
            }
        if (minimal) {
            up = u;
            break;
        }
    }
    for (const auto& u : upper)
        if (prove_lt(u, up)) up = u;

    // Lower: log n >= c when 2^{<c} < n or c is a strong limit <= n;
    // log n > c when 2^c < n.
    Cardinal low = Cardinal::aleph(Ordinal::zero());
    bool low_strict = false;
    auto consider = [&](const Cardinal& c, bool strict) {
        if (prove_lt(low, c) || (prove_le(low, c) && (strict || !low_strict))) {
            low = c;
            low_strict = strict;
        }
    };
    for (const auto& c : candidates) {
        if (prove_lt(Cardinal::weak_pow(c), n) || (strong_limit_atom(c) && prove_le(c, n))) consider(c, false);
        if (prove_lt(Cardinal::exp2(c), n)) consider(c, true);
    }

    Trace tr{make_step("log-definition", "log " + n.str() + " <= " + up.str())};
    if (!low_strict && prove_le(up, low)) {
        tr.push_back(make_step("log-definition", "log " + n.str() + " = " + low.str()));
        return exact_estimate(low, std::move(tr));
    }
    tr.push_back(make_step("log-definition",
                           "log " + n.str() + (low_strict ? " > " : " >= ") + low.str()));
    Estimate e;
    e.bounds = {low, low_strict, up};
    e.trace = std::move(tr);
    return e;
}

Estimate Reasoner::weak_power(const Cardinal& t) {
    const Cardinal n = normalize(t);
    require_infinite(n, "weak_power");
    const Cardinal w = normalize(Cardinal::weak_pow(n));
    if (!w.is(K::WeakPow))
        return exact_estimate(w, {make_step("normalize", "2^<" + n.str() + " = " + w.str())});
    Estimate e;
    e.bounds = {n, false, normalize(Cardinal::exp2(n))};
    e.trace = {make_step("weak-power-bounds", n.str() + " <= 2^<" + n.str() + " <= 2^" + n.str())};
    return e;
}

Estimate Reasoner::m_bounds(const Cardinal& sigma) {
    const Cardinal n = normalize(sigma);
    require_infinite(n, "m_bounds");
    if (n == Cardinal::aleph(Ordinal::zero()))
        return exact_estimate(continuum_, {make_step("m-omega", "m(" + n.str() + ") = " + continuum_.str())});

    Estimate lg = log_card(n);
    const Cardinal L = lg.exact ? *lg.exact : lg.bounds.lower;
    const Cardinal U = lg.exact ? *lg.exact : lg.bounds.upper;
    const bool L_strict = !lg.exact && lg.bounds.lower_strict;

    const Cardinal upper = normalize(Cardinal::pow_omega(U));
    Cardinal low = L;
    bool strict = L_strict;
    if (prove_le(L, continuum_)) {
        low = continuum_;
        strict = L_strict && prove_le(continuum_, L);
    } else if (!prove_le(continuum_, L)) {
        low = normalize(Cardinal::sup({continuum_, L}));
        strict = false;
    }
    // cf(m(s)) > w, so a lower bound of countable cofinality is never attained.
    if (!strict && cofinality(low).value == Cofinality::Omega) strict = true;

    Trace tr = lg.trace;
    auto finish_exact = [&](const Cardinal& v) {
        tr.push_back(make_step("m-bounds", "m(" + n.str() + ") = " + v.str()));
        return exact_estimate(v, std::move(tr));
    };
    if (!strict && prove_le(upper, low)) return finish_exact(low);
    if (strict && low.is(K::Aleph) && !low.index().is_omega_one()) {
        Cardinal next = Cardinal::aleph(successor(low.index().ordinal()));
        if (prove_le(upper, next) && prove_le(next, upper)) return finish_exact(next);
    }
    tr.push_back(make_step("m-bounds", "m(" + n.str() + ")" + (strict ? " > " : " >= ") + low.str() +
                                           " and m(" + n.str() + ") <= " + upper.str()));
    Estimate e;
    e.bounds = {low, strict, upper};
    e.trace = std::move(tr);
    return e;
}

}  // namespace stoyanov
