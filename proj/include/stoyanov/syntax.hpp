#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "stoyanov/cardinal.hpp"
#include "stoyanov/context.hpp"
#include "stoyanov/ordinal.hpp"

namespace stoyanov {

// Text grammars shared by the CLI and the tests. All parsers throw
// std::invalid_argument with a position on malformed input.
//
//   ordinal   0 | 7 | w | w*2+3 | w^w | w^(w+1)*2
//   index     ordinal | w1
//   cardinal  n | c | aleph(index) | beth(index) | 2^cardinal
//             | poww(cardinal) | weakpow(cardinal) | sup[cardinal, ...] | (cardinal)

Ordinal parse_ordinal(std::string_view text);
CardIndex parse_index(std::string_view text);
Cardinal parse_cardinal(std::string_view text);

/// Unvalidated context directives, kept apart so that sources can be merged
/// before the AxiomContext is built.
struct ContextDirectives {
    std::vector<Assumption> flags;
    std::vector<ContinuumEquality> equalities;
};

/// One directive: GCH | CH | notCH | lusin (any case) or `2^<atom> = <cardinal>`.
void parse_directive(std::string_view line, ContextDirectives& into);
/// Line oriented; `#` starts a comment, blank lines are skipped.
ContextDirectives parse_context_text(std::string_view text);
AxiomContext build_context(const ContextDirectives& d);

}  // namespace stoyanov
