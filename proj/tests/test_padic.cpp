#include "doctest.h"

#include <random>
#include <set>

#include "stoyanov/padic.hpp"

using namespace stoyanov::padic;

namespace {

Vector vec(std::initializer_list<long> xs) {
    Vector v;
    for (long x : xs) v.emplace_back(x);
    return v;
}

Subgroup sub(std::vector<Ambient::Component> comps, std::vector<Vector> gens) {
    return Subgroup(Ambient(std::move(comps)), std::move(gens));
}

/// Exhaustive: every nonzero x in [-2,2]^{n_p} of each block has a nonzero
/// multiple in H, tested by the augmented-rank criterion.
bool essential_by_enumeration(const Subgroup& h) {
    const std::size_t base = free_rank(h);
    const std::size_t n = h.ambient.total_rank();
    for (const auto& c : h.ambient.components()) {
        const std::size_t off = h.ambient.offset_of(c.prime);
        std::vector<long> x(c.rank, -2);
        for (;;) {
            if (std::any_of(x.begin(), x.end(), [](long v) { return v != 0; })) {
                Vector full(n, Rational(0));
                for (std::size_t k = 0; k < c.rank; ++k) full[off + k] = x[k];
                auto rows = h.generators;
                rows.push_back(full);
                if (free_rank(rows) != base) return false;
            }
            std::size_t k = 0;
            while (k < c.rank && x[k] == 2) x[k++] = -2;
            if (k == c.rank) break;
            ++x[k];
        }
    }
    return true;
}

/// Size of the Z/p span of the block projections, by closure under addition.
std::size_t span_size_mod_p(const Subgroup& h, std::uint64_t p) {
    const std::size_t off = h.ambient.offset_of(p);
    const std::size_t r = h.ambient.components()[h.ambient.index_of(p)].rank;
    std::vector<std::vector<std::uint64_t>> gens;
    for (const auto& g : h.generators) {
        std::vector<std::uint64_t> v;
        for (std::size_t k = 0; k < r; ++k) {
            const Rational& q = g[off + k];
            // denominators are prime to p; find the residue by search
            const auto num = boost::multiprecision::numerator(q), den = boost::multiprecision::denominator(q);
            for (std::uint64_t a = 0; a < p; ++a)
                if (((den * a - num) % p) == 0) {
                    v.push_back(a);
                    break;
                }
        }
        gens.push_back(v);
    }
    std::set<std::vector<std::uint64_t>> span{std::vector<std::uint64_t>(r, 0)};
    bool grew = true;
    while (grew) {
        grew = false;
        for (auto s : std::vector(span.begin(), span.end()))
            for (const auto& g : gens) {
                for (std::size_t k = 0; k < r; ++k) s[k] = (s[k] + g[k]) % p;
                grew = span.insert(s).second || grew;
            }
    }
    return span.size();
}

std::size_t ipow(std::size_t b, std::size_t e) {
    std::size_t r = 1;
    while (e--) r *= b;
    return r;
}

Subgroup random_subgroup(std::mt19937_64& rng) {
    static const std::uint64_t primes[] = {2, 3, 5, 7};
    std::vector<Ambient::Component> comps;
    for (auto p : primes)
        if (rng() % 2 || comps.empty()) comps.push_back({p, 1 + rng() % 2});
    const Ambient a(comps);
    std::vector<Vector> gens;
    const std::size_t count = rng() % (a.total_rank() + 2);
    for (std::size_t i = 0; i < count; ++i) {
        Vector v;
        for (std::size_t k = 0; k < a.total_rank(); ++k) v.emplace_back(static_cast<long>(rng() % 5) - 2);
        gens.push_back(v);
    }
    return Subgroup(a, gens);
}

}  // namespace

TEST_CASE("free rank") {
    CHECK(free_rank(std::vector<Vector>{vec({1, 0}), vec({0, 1})}) == 2);
    CHECK(free_rank(std::vector<Vector>{vec({1, 1}), vec({2, 2})}) == 1);
    CHECK(free_rank(std::vector<Vector>{}) == 0);
}

TEST_CASE("essential") {
    CHECK(essential(sub({{5, 2}}, {vec({1, 0}), vec({0, 1})})));
    CHECK_FALSE(essential(sub({{5, 2}}, {vec({1, 5})})));
    CHECK(essential(sub({{5, 2}}, {vec({2, 0}), vec({0, 3})})));
    CHECK_FALSE(essential(sub({{2, 2}, {3, 1}}, {vec({1, 0, 1})})));
    CHECK_FALSE(essential(sub({{2, 1}}, {vec({0})})));
    // A diagonal generator meets neither coordinate axis.
    CHECK_FALSE(essential(sub({{2, 1}, {3, 1}}, {vec({1, 1})})));
    CHECK(essential(sub({{2, 1}, {3, 1}}, {vec({1, 0}), vec({0, 1})})));
    CHECK_THROWS_AS(essential_in_component(sub({{2, 1}}, {vec({1})}), 3), std::out_of_range);
}

TEST_CASE("dense") {
    CHECK(dense(sub({{5, 1}}, {vec({1})})));
    CHECK_FALSE(dense(sub({{5, 1}}, {vec({5})})));
    CHECK(dense(sub({{2, 2}}, {vec({1, 0}), vec({0, 1})})));
    CHECK(mod_p_rank(sub({{3, 2}}, {vec({1, 1}), vec({2, 2})}), 3) == 1);
}

TEST_CASE("minimal_check") {
    CHECK(minimal_check(sub({{5, 1}}, {vec({1})})).minimal);
    const auto nd = minimal_check(sub({{5, 1}}, {vec({5})}));
    CHECK_FALSE(nd.minimal);
    CHECK(*nd.reason == NotMinimalReason::NotDense);
    CHECK(*minimal_check(sub({{5, 2}}, {vec({1, 0})})).reason == NotMinimalReason::NotDense);
    // Dense in both factors, but the diagonal meets neither axis.
    const auto ne = minimal_check(sub({{2, 1}, {3, 1}}, {vec({1, 1})}));
    CHECK(*ne.reason == NotMinimalReason::NotEssential);
    CHECK(to_string(NotMinimalReason::NotEssential) == "not-essential");
}

TEST_CASE("essential closure") {
    const auto c = essential_closure(sub({{5, 2}}, {vec({1, 0})}));
    REQUIRE(c.generators.size() == 2);
    CHECK(c.generators[0] == vec({1, 0}));
    CHECK(c.generators[1] == vec({0, 1}));
    CHECK(essential(c));

    const auto full = sub({{3, 2}}, {vec({1, 2}), vec({0, 1})});
    CHECK(essential_closure(full).generators == full.generators);

    const auto mixed = essential_closure(sub({{2, 2}, {3, 1}}, {vec({1, 1, 0})}));
    CHECK(essential(mixed));
    CHECK(mixed.generators.front() == vec({1, 1, 0}));
    CHECK(mixed.generators.size() == 3);

    CHECK_THROWS_AS(essential_closure(sub({{3, 2}}, {vec({1, 1}), vec({2, 2})})), std::invalid_argument);
}

TEST_CASE("oracle") {
    CHECK(essential_oracle(sub({{3, 2}}, {vec({1, 0}), vec({0, 1})}), 1000, 1));
    CHECK_FALSE(essential_oracle(sub({{3, 2}}, {vec({1, 3})}), 1000, 42));
    CHECK_FALSE(essential_oracle(sub({{2, 1}}, {vec({0})}), 5, 3));
    CHECK_THROWS_AS(essential_oracle(sub({{2, 1}}, {vec({1})}), 0, 3), std::invalid_argument);
    const auto h = sub({{3, 2}, {5, 1}}, {vec({1, 3, 0})});
    CHECK(essential_oracle(h, 50, 9) == essential_oracle(h, 50, 9));
}

TEST_CASE("random subgroups agree with the enumeration and span oracles") {
    std::mt19937_64 rng(2024);
    for (int i = 0; i < 150; ++i) {
        const Subgroup h = random_subgroup(rng);
        CHECK(essential(h) == essential_by_enumeration(h));
        for (const auto& c : h.ambient.components())
            CHECK(span_size_mod_p(h, c.prime) == ipow(c.prime, mod_p_rank(h, c.prime)));
        if (!essential_oracle(h, 200, i)) CHECK_FALSE(essential(h));
    }
}

TEST_CASE("validation and parsing") {
    CHECK_THROWS_AS(Ambient({{4, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(Ambient({{3, 1}, {3, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(Ambient({{3, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(sub({{3, 2}}, {vec({1})}), std::invalid_argument);
    CHECK_THROWS_AS(sub({{3, 1}}, {Vector{Rational(1, 3)}}), std::invalid_argument);
    CHECK_NOTHROW(sub({{3, 1}}, {Vector{Rational(1, 2)}}));

    const auto h = parse_subgroup("# sample\nambient: 3^2 2^1\n1 0 1/2\n0 1 0\n");
    CHECK(h.ambient.to_string() == "2^1 3^2");
    REQUIRE(h.generators.size() == 2);
    CHECK(h.generators[0][2] == Rational(1, 2));
    CHECK_THROWS_AS(parse_subgroup("1 0\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_subgroup("ambient: 3^2\n1 x\n"), std::invalid_argument);
}
