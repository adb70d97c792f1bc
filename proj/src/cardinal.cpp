#include "stoyanov/cardinal.hpp"

#include <algorithm>
#include <stdexcept>

namespace stoyanov {

const Ordinal& CardIndex::ordinal() const {
    if (!ord_) throw std::domain_error("index w1 is not a countable ordinal");
    return *ord_;
}

std::strong_ordering operator<=>(const CardIndex& a, const CardIndex& b) {
    if (a.is_omega_one() || b.is_omega_one()) return a.is_omega_one() <=> b.is_omega_one();
    return *a.ord_ <=> *b.ord_;
}

namespace {

std::string render(Cardinal::Kind kind, std::uint64_t fin, const CardIndex& index,
                   const std::vector<Cardinal>& kids) {
    switch (kind) {
        case Cardinal::Kind::Fin: return std::to_string(fin);
        case Cardinal::Kind::Aleph: return "aleph(" + index.to_string() + ")";
        case Cardinal::Kind::Beth: return "beth(" + index.to_string() + ")";
        case Cardinal::Kind::Exp2: return "2^" + kids.front().str();
        case Cardinal::Kind::PowOmega: return "poww(" + kids.front().str() + ")";
        case Cardinal::Kind::WeakPow: return "weakpow(" + kids.front().str() + ")";
        case Cardinal::Kind::Sup: {
            std::string s = "sup[";
            for (std::size_t i = 0; i < kids.size(); ++i) {
                if (i) s += ", ";
                s += kids[i].str();
            }
            return s + "]";
        }
    }
    return {};
}

}  // namespace

Cardinal Cardinal::make(Node n) {
    n.text = render(n.kind, n.fin, n.index, n.kids);
    return Cardinal{std::make_shared<const Node>(std::move(n))};
}

Cardinal Cardinal::fin(std::uint64_t n) { return make({Kind::Fin, n, Ordinal{}, {}, {}}); }
Cardinal Cardinal::aleph(CardIndex i) { return make({Kind::Aleph, 0, std::move(i), {}, {}}); }
Cardinal Cardinal::beth(CardIndex i) { return make({Kind::Beth, 0, std::move(i), {}, {}}); }
Cardinal Cardinal::exp2(Cardinal base) { return make({Kind::Exp2, 0, Ordinal{}, {std::move(base)}, {}}); }
Cardinal Cardinal::pow_omega(Cardinal base) {
    return make({Kind::PowOmega, 0, Ordinal{}, {std::move(base)}, {}});
}
Cardinal Cardinal::weak_pow(Cardinal base) {
    return make({Kind::WeakPow, 0, Ordinal{}, {std::move(base)}, {}});
}
Cardinal Cardinal::sup(std::vector<Cardinal> items) {
    if (items.empty()) throw std::invalid_argument("sup of an empty list");
    return make({Kind::Sup, 0, Ordinal{}, std::move(items), {}});
}
Cardinal Cardinal::continuum() { return exp2(aleph(Ordinal::zero())); }

std::size_t Cardinal::depth() const {
    std::size_t d = 0;
    for (const auto& k : node_->kids) d = std::max(d, k.depth());
    return d + 1;
}

bool operator==(const Cardinal& a, const Cardinal& b) {
    return a.node_ == b.node_ || a.node_->text == b.node_->text;
}

std::strong_ordering operator<=>(const Cardinal& a, const Cardinal& b) {
    if (auto c = a.kind() <=> b.kind(); c != 0) return c;
    return a.str() <=> b.str();
}

}  // namespace stoyanov
