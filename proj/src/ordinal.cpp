#include "stoyanov/ordinal.hpp"

#include <stdexcept>

namespace stoyanov {

Ordinal Ordinal::finite(std::uint64_t n) {
    Ordinal o;
    if (n > 0) o.terms_.push_back({Ordinal{}, n});
    return o;
}

Ordinal Ordinal::omega() { return omega_power(finite(1)); }

Ordinal Ordinal::omega_power(Ordinal exponent, std::uint64_t coefficient) {
    if (coefficient == 0) throw std::invalid_argument("CNF coefficient must be positive");
    Ordinal o;
    o.terms_.push_back({std::move(exponent), coefficient});
    return o;
}

Ordinal Ordinal::from_terms(std::vector<Term> terms) {
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (terms[i].coefficient == 0) throw std::invalid_argument("CNF coefficient must be positive");
        if (i > 0 && !(terms[i].exponent < terms[i - 1].exponent))
            throw std::invalid_argument("CNF exponents must strictly decrease");
    }
    Ordinal o;
    o.terms_ = std::move(terms);
    return o;
}

bool Ordinal::is_finite() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].exponent.is_zero());
}

std::uint64_t Ordinal::finite_value() const {
    if (!is_finite()) throw std::domain_error("ordinal is not finite: " + to_string());
    return terms_.empty() ? 0 : terms_[0].coefficient;
}

std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b) {
    const auto n = std::min(a.terms_.size(), b.terms_.size());
    for (std::size_t i = 0; i < n; ++i) {
        const auto& x = a.terms_[i];
        const auto& y = b.terms_[i];
        if (auto c = x.exponent <=> y.exponent; c != 0) return c;
        if (auto c = x.coefficient <=> y.coefficient; c != 0) return c;
    }
    return a.terms_.size() <=> b.terms_.size();
}

bool operator==(const Ordinal& a, const Ordinal& b) { return a.terms_ == b.terms_; }

Ordinal operator+(const Ordinal& a, const Ordinal& b) {
    if (b.is_zero()) return a;
    const auto& lead = b.terms_.front();
    Ordinal out;
    for (const auto& t : a.terms_) {
        if (t.exponent > lead.exponent) {
            out.terms_.push_back(t);
        } else {
            if (t.exponent == lead.exponent) {
                out.terms_.push_back({lead.exponent, t.coefficient + lead.coefficient});
                out.terms_.insert(out.terms_.end(), b.terms_.begin() + 1, b.terms_.end());
                return out;
            }
            break;
        }
    }
    out.terms_.insert(out.terms_.end(), b.terms_.begin(), b.terms_.end());
    return out;
}

std::string Ordinal::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        const auto& t = terms_[i];
        if (i > 0) s += "+";
        if (t.exponent.is_zero()) {
            s += std::to_string(t.coefficient);
            continue;
        }
        s += "w";
        if (t.exponent != finite(1)) {
            const auto& e = t.exponent;
            // Bare exponents: naturals and plain w; anything else is parenthesised.
            if (e.is_finite() || e == omega())
                s += "^" + e.to_string();
            else
                s += "^(" + e.to_string() + ")";
        }
        if (t.coefficient != 1) s += "*" + std::to_string(t.coefficient);
    }
    return s;
}

OrdinalKind classify(const Ordinal& a) {
    if (a.is_zero()) return OrdinalKind::Zero;
    return a.terms().back().exponent.is_zero() ? OrdinalKind::Successor : OrdinalKind::Limit;
}

Ordinal successor(const Ordinal& a) { return a + Ordinal::finite(1); }

Ordinal predecessor(const Ordinal& a) {
    if (classify(a) != OrdinalKind::Successor)
        throw std::domain_error("ordinal has no predecessor: " + a.to_string());
    auto terms = a.terms();
    if (--terms.back().coefficient == 0) terms.pop_back();
    return Ordinal::from_terms(std::move(terms));
}

Ordinal ord_cofinality(const Ordinal& a) {
    if (classify(a) != OrdinalKind::Limit)
        throw std::domain_error("cofinality is only defined here for limit ordinals: " + a.to_string());
    return Ordinal::omega();
}

Ordinal fundamental_element(const Ordinal& a, std::uint64_t n) {
    if (classify(a) != OrdinalKind::Limit)
        throw std::domain_error("fundamental sequences need a limit ordinal: " + a.to_string());
    auto terms = a.terms();
    const Ordinal last_exp = terms.back().exponent;
    if (--terms.back().coefficient == 0) terms.pop_back();
    const Ordinal base = Ordinal::from_terms(std::move(terms));

    if (classify(last_exp) == OrdinalKind::Successor) {
        if (n == 0) return base;
        return base + Ordinal::omega_power(predecessor(last_exp), n);
    }
    return base + Ordinal::omega_power(fundamental_element(last_exp, n));
}

std::function<Ordinal(std::uint64_t)> fundamental_sequence(const Ordinal& a) {
    if (classify(a) != OrdinalKind::Limit)
        throw std::domain_error("fundamental sequences need a limit ordinal: " + a.to_string());
    return [a](std::uint64_t n) { return fundamental_element(a, n); };
}

}  // namespace stoyanov
