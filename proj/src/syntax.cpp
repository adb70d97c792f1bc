#include "stoyanov/syntax.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace stoyanov {

namespace {

class Lexer {
public:
    explicit Lexer(std::string_view s) : s_(s) {}

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool done() {
        skip();
        return pos_ >= s_.size();
    }
    char peek() {
        skip();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }
    bool accept(std::string_view tok) {
        skip();
        if (s_.substr(pos_, tok.size()) != tok) return false;
        pos_ += tok.size();
        return true;
    }
    /// Like accept, but only when the keyword is not followed by more letters.
    bool accept_word(std::string_view word) {
        skip();
        if (s_.substr(pos_, word.size()) != word) return false;
        const auto end = pos_ + word.size();
        if (end < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[end])) || s_[end] == '_')) return false;
        pos_ = end;
        return true;
    }
    void expect(std::string_view tok) {
        if (!accept(tok)) fail("expected '" + std::string(tok) + "'");
    }
    std::uint64_t number() {
        skip();
        const auto start = pos_;
        std::uint64_t v = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            const auto d = static_cast<std::uint64_t>(s_[pos_] - '0');
            if (v > (UINT64_MAX - d) / 10) fail("number too large");
            v = v * 10 + d;
            ++pos_;
        }
        if (pos_ == start) fail("expected a number");
        return v;
    }
    bool at_digit() { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }
    /// True when the upcoming digits are exactly "2" followed by '^'.
    bool at_power_of_two() {
        skip();
        return s_.substr(pos_, 2) == "2^";
    }

    [[noreturn]] void fail(const std::string& why) const {
        throw std::invalid_argument("parse error at position " + std::to_string(pos_) + " in '" + std::string(s_) +
                                    "': " + why);
    }

private:
    std::string_view s_;
    std::size_t pos_ = 0;
};

Ordinal ordinal_sum(Lexer& lx);

Ordinal ordinal_exponent(Lexer& lx) {
    if (lx.accept("(")) {
        Ordinal e = ordinal_sum(lx);
        lx.expect(")");
        return e;
    }
    if (lx.at_digit()) return Ordinal::finite(lx.number());
    if (lx.accept_word("w")) return Ordinal::omega();
    lx.fail("expected an exponent");
}

Ordinal ordinal_term(Lexer& lx) {
    if (lx.at_digit()) return Ordinal::finite(lx.number());
    if (!lx.accept("w")) lx.fail("expected an ordinal term");
    Ordinal e = Ordinal::finite(1);
    if (lx.accept("^")) e = ordinal_exponent(lx);
    std::uint64_t c = 1;
    if (lx.accept("*")) {
        c = lx.number();
        if (c == 0) return Ordinal::zero();
    }
    return Ordinal::omega_power(e, c);
}

Ordinal ordinal_sum(Lexer& lx) {
    Ordinal out = ordinal_term(lx);
    while (lx.accept("+")) out = out + ordinal_term(lx);
    return out;
}

CardIndex index_of(Lexer& lx) {
    if (lx.accept_word("w1")) return CardIndex::omega_one();
    return ordinal_sum(lx);
}

Cardinal cardinal(Lexer& lx) {
    if (lx.at_power_of_two()) {
        lx.expect("2^");
        return Cardinal::exp2(cardinal(lx));
    }
    if (lx.at_digit()) return Cardinal::fin(lx.number());
    if (lx.accept("(")) {
        Cardinal c = cardinal(lx);
        lx.expect(")");
        return c;
    }
    if (lx.accept_word("c")) return Cardinal::continuum();
    auto unary = [&](auto make) {
        lx.expect("(");
        auto c = make();
        lx.expect(")");
        return c;
    };
    if (lx.accept("aleph")) return unary([&] { return Cardinal::aleph(index_of(lx)); });
    if (lx.accept("beth")) return unary([&] { return Cardinal::beth(index_of(lx)); });
    if (lx.accept("poww")) return unary([&] { return Cardinal::pow_omega(cardinal(lx)); });
    if (lx.accept("weakpow")) return unary([&] { return Cardinal::weak_pow(cardinal(lx)); });
    if (lx.accept("sup")) {
        lx.expect("[");
        std::vector<Cardinal> items{cardinal(lx)};
        while (lx.accept(",")) items.push_back(cardinal(lx));
        lx.expect("]");
        return Cardinal::sup(std::move(items));
    }
    lx.fail("expected a cardinal");
}

template <class F>
auto parse_all(std::string_view text, F f) {
    Lexer lx(text);
    auto v = f(lx);
    if (!lx.done()) lx.fail("unexpected trailing input");
    return v;
}

std::string lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return std::tolower(c); });
    return out;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

}  // namespace

Ordinal parse_ordinal(std::string_view text) { return parse_all(text, ordinal_sum); }
CardIndex parse_index(std::string_view text) { return parse_all(text, index_of); }
Cardinal parse_cardinal(std::string_view text) { return parse_all(text, cardinal); }

void parse_directive(std::string_view line, ContextDirectives& into) {
    line = trim(line);
    const std::string key = lower(line);
    if (key == "gch") return into.flags.push_back(Assumption::GCH);
    if (key == "ch") return into.flags.push_back(Assumption::CH);
    if (key == "notch" || key == "not-ch" || key == "not_ch") return into.flags.push_back(Assumption::NotCH);
    if (key == "lusin") return into.flags.push_back(Assumption::Lusin);
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw std::invalid_argument("unknown context directive: '" + std::string(line) + "'");
    Cardinal lhs = parse_cardinal(line.substr(0, eq));
    Cardinal rhs = parse_cardinal(line.substr(eq + 1));
    if (!lhs.is(Cardinal::Kind::Exp2))
        throw std::invalid_argument("left side of a context equality must be 2^<atom>: '" + std::string(line) + "'");
    into.equalities.push_back({lhs.arg(), rhs});
}

ContextDirectives parse_context_text(std::string_view text) {
    ContextDirectives d;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(start, end - start);
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        if (!trim(line).empty()) parse_directive(line, d);
        start = end + 1;
    }
    return d;
}

AxiomContext build_context(const ContextDirectives& d) { return AxiomContext(d.flags, d.equalities); }

}  // namespace stoyanov
