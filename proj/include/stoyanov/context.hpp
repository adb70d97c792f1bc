#pragma once

#include <string>
#include <vector>

#include "stoyanov/cardinal.hpp"

namespace stoyanov {

enum class Assumption { GCH, CH, NotCH, Lusin };

std::string to_string(Assumption a);

/// One assumed value of the continuum function: 2^argument = value.
struct ContinuumEquality {
    Cardinal argument;
    Cardinal value;
};

/// A set of assumptions about the continuum function on top of ZFC.
///
/// Instances are validated on construction: mutually exclusive flags,
/// equalities that break Cantor's theorem, Koenig's theorem or monotonicity
/// of k -> 2^k, and equalities that disagree with GCH are rejected with
/// std::invalid_argument.
class AxiomContext {
public:
    /// Bare ZFC.
    AxiomContext() = default;
    AxiomContext(std::vector<Assumption> flags, std::vector<ContinuumEquality> equalities);

    static AxiomContext zfc() { return {}; }
    static AxiomContext gch() { return AxiomContext({Assumption::GCH}, {}); }

    bool has(Assumption a) const;
    const std::vector<Assumption>& flags() const { return flags_; }
    /// Equalities as given, without those implied by flags.
    const std::vector<ContinuumEquality>& equalities() const { return equalities_; }
    /// Equalities including CH (2^aleph_0 = aleph_1) and Lusin (2^aleph_1 = 2^aleph_0).
    std::vector<ContinuumEquality> effective_equalities() const;

    /// Text form, one directive per line.
    std::string to_string() const;

private:
    std::vector<Assumption> flags_;
    std::vector<ContinuumEquality> equalities_;
};

}  // namespace stoyanov
