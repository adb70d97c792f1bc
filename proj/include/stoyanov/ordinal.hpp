#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace stoyanov {

/// Ordinal below epsilon_0 in Cantor normal form.
///
/// The value is w^e1*c1 + w^e2*c2 + ... with e1 > e2 > ... and every
/// coefficient positive. The empty sum is zero. Exponents are ordinals of
/// the same kind, so the representation is hereditarily finite.
class Ordinal {
public:
    struct Term;

    Ordinal() = default;

    static Ordinal zero() { return {}; }
    static Ordinal finite(std::uint64_t n);
    static Ordinal omega();
    /// w^exponent * coefficient; coefficient must be positive.
    static Ordinal omega_power(Ordinal exponent, std::uint64_t coefficient = 1);
    /// Builds from raw terms; throws std::invalid_argument unless already in CNF.
    static Ordinal from_terms(std::vector<Term> terms);

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_finite() const;
    /// Value of a finite ordinal; throws std::domain_error otherwise.
    std::uint64_t finite_value() const;

    friend std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b);
    friend bool operator==(const Ordinal& a, const Ordinal& b);

    /// Non-commutative ordinal sum.
    friend Ordinal operator+(const Ordinal& a, const Ordinal& b);

    std::string to_string() const;

private:
    std::vector<Term> terms_;
};

struct Ordinal::Term {
    Ordinal exponent;
    std::uint64_t coefficient = 1;

    friend bool operator==(const Term&, const Term&) = default;
};

enum class OrdinalKind { Zero, Successor, Limit };

OrdinalKind classify(const Ordinal& a);

/// a+1.
Ordinal successor(const Ordinal& a);
/// The b with b+1 == a; throws std::domain_error unless a is a successor.
Ordinal predecessor(const Ordinal& a);

/// Cofinality of a limit ordinal below epsilon_0. Every such ordinal is
/// countable, so the answer is always w. Throws std::domain_error for zero
/// and successor inputs.
Ordinal ord_cofinality(const Ordinal& a);

/// n-th element of the standard fundamental sequence of a limit ordinal:
/// (b + w^(c+1))[n] = b + w^c * n and (b + w^c)[n] = b + w^(c[n]) for limit c.
/// Throws std::domain_error for zero and successor inputs.
Ordinal fundamental_element(const Ordinal& a, std::uint64_t n);

/// The fundamental sequence as a function object.
std::function<Ordinal(std::uint64_t)> fundamental_sequence(const Ordinal& a);

}  // namespace stoyanov
