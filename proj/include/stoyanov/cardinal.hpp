#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "stoyanov/ordinal.hpp"

namespace stoyanov {

/// Subscript of an aleph or beth: a countable ordinal in CNF, or the single
/// uncountable index w1.
class CardIndex {
public:
    CardIndex(Ordinal o) : ord_(std::move(o)) {}  // NOLINT(implicit)
    static CardIndex omega_one() { return CardIndex{}; }

    bool is_omega_one() const { return !ord_.has_value(); }
    /// Throws std::domain_error for w1.
    const Ordinal& ordinal() const;

    bool is_zero() const { return ord_ && ord_->is_zero(); }
    bool is_successor() const { return ord_ && classify(*ord_) == OrdinalKind::Successor; }
    /// Countable limit or w1.
    bool is_limit() const { return !ord_ || classify(*ord_) == OrdinalKind::Limit; }

    friend std::strong_ordering operator<=>(const CardIndex& a, const CardIndex& b);
    friend bool operator==(const CardIndex& a, const CardIndex& b) { return a.ord_ == b.ord_; }

    std::string to_string() const { return ord_ ? ord_->to_string() : "w1"; }

private:
    CardIndex() = default;
    std::optional<Ordinal> ord_;
};

/// Symbolic cardinal expression. Immutable, cheap to copy (shared nodes).
class Cardinal {
public:
    enum class Kind { Fin, Aleph, Beth, Exp2, PowOmega, Sup, WeakPow };

    static Cardinal fin(std::uint64_t n);
    static Cardinal aleph(CardIndex i);
    static Cardinal beth(CardIndex i);
    /// 2^base
    static Cardinal exp2(Cardinal base);
    /// base^w
    static Cardinal pow_omega(Cardinal base);
    /// 2^{<base}
    static Cardinal weak_pow(Cardinal base);
    /// Throws std::invalid_argument on an empty list.
    static Cardinal sup(std::vector<Cardinal> items);
    /// 2^aleph(0)
    static Cardinal continuum();

    Kind kind() const { return node_->kind; }
    bool is(Kind k) const { return node_->kind == k; }
    std::uint64_t fin_value() const { return node_->fin; }
    const CardIndex& index() const { return node_->index; }
    /// Argument of Exp2, PowOmega and WeakPow.
    const Cardinal& arg() const { return node_->kids.front(); }
    const std::vector<Cardinal>& items() const { return node_->kids; }

    /// Canonical text in the CLI literal grammar.
    const std::string& str() const { return node_->text; }
    std::size_t depth() const;

    friend bool operator==(const Cardinal& a, const Cardinal& b);
    /// Structural total order, used to keep sup lists canonical.
    friend std::strong_ordering operator<=>(const Cardinal& a, const Cardinal& b);

private:
    struct Node {
        Kind kind = Kind::Fin;
        std::uint64_t fin = 0;
        CardIndex index = Ordinal{};
        std::vector<Cardinal> kids;
        std::string text;
    };
    explicit Cardinal(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    static Cardinal make(Node n);

    std::shared_ptr<const Node> node_;
};

}  // namespace stoyanov
