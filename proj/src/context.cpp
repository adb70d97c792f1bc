#include "stoyanov/context.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "stoyanov/reasoner.hpp"

namespace stoyanov {

std::string to_string(Assumption a) {
    switch (a) {
        case Assumption::GCH: return "GCH";
        case Assumption::CH: return "CH";
        case Assumption::NotCH: return "notCH";
        default: return "lusin";
    }
}

namespace {

[[noreturn]] void reject(const std::string& why) { throw std::invalid_argument("inconsistent context: " + why); }

std::string eq_text(const ContinuumEquality& e) { return "2^" + e.argument.str() + " = " + e.value.str(); }

}  // namespace

AxiomContext::AxiomContext(std::vector<Assumption> flags, std::vector<ContinuumEquality> equalities)
    : flags_(std::move(flags)), equalities_(std::move(equalities)) {
    std::sort(flags_.begin(), flags_.end());
    flags_.erase(std::unique(flags_.begin(), flags_.end()), flags_.end());

    if (has(Assumption::CH) && has(Assumption::NotCH)) reject("CH and notCH");
    if (has(Assumption::GCH) && has(Assumption::Lusin)) reject("GCH gives 2^aleph(1) = aleph(2) > 2^aleph(0)");

    for (const auto& e : equalities_)
        if (!e.argument.is(Cardinal::Kind::Aleph) && !e.argument.is(Cardinal::Kind::Beth))
            reject("equality argument must be an aleph or beth atom: " + eq_text(e));

    Reasoner r(*this);
    std::vector<ContinuumEquality> norm;
    for (const auto& e : equalities_) {
        ContinuumEquality n{r.normalize(e.argument), r.normalize(e.value)};
        if (!r.is_infinite(n.value)) reject("finite value in " + eq_text(e));
        if (r.prove_le(n.value, n.argument)) reject("Cantor's theorem fails in " + eq_text(e));
        if (r.cofinality(n.value).value == Cofinality::Omega)
            reject("Koenig's theorem fails in " + eq_text(e) + ": the value has countable cofinality");
        norm.push_back(std::move(n));
    }
    for (std::size_t i = 0; i < norm.size(); ++i)
        for (std::size_t j = 0; j < norm.size(); ++j)
            if (i != j && r.prove_le(norm[i].argument, norm[j].argument) && r.prove_lt(norm[j].value, norm[i].value))
                reject("monotonicity fails between " + eq_text(equalities_[i]) + " and " + eq_text(equalities_[j]));

    if (has(Assumption::NotCH) && r.prove_le(r.continuum(), Cardinal::aleph(Ordinal::finite(1))))
        reject("notCH contradicts 2^aleph(0) <= aleph(1)");

    if (has(Assumption::GCH) && !equalities_.empty()) {
        Reasoner g(AxiomContext::gch());
        for (const auto& e : equalities_)
            if (!g.equal(Cardinal::exp2(e.argument), e.value).provable())
                reject(eq_text(e) + " disagrees with GCH");
    }
}

bool AxiomContext::has(Assumption a) const {
    auto present = [&](Assumption x) { return std::find(flags_.begin(), flags_.end(), x) != flags_.end(); };
    if (a == Assumption::CH) return present(Assumption::CH) || present(Assumption::GCH);
    return present(a);
}

std::vector<ContinuumEquality> AxiomContext::effective_equalities() const {
    std::vector<ContinuumEquality> out = equalities_;
    const Cardinal a0 = Cardinal::aleph(Ordinal::zero());
    const Cardinal a1 = Cardinal::aleph(Ordinal::finite(1));
    if (has(Assumption::CH)) out.push_back({a0, a1});
    if (has(Assumption::Lusin)) out.push_back({a1, Cardinal::exp2(a0)});
    return out;
}

std::string AxiomContext::to_string() const {
    std::ostringstream os;
    for (auto f : flags_) os << stoyanov::to_string(f) << '\n';
    for (const auto& e : equalities_) os << eq_text(e) << '\n';
    return os.str();
}

}  // namespace stoyanov
