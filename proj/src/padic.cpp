#include "stoyanov/padic.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

namespace stoyanov::padic {

namespace {

using boost::multiprecision::cpp_int;

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d <= n / d; ++d)
        if (n % d == 0) return false;
    return true;
}

std::uint64_t mod_of(const cpp_int& v, std::uint64_t p) {
    cpp_int r = v % p;
    if (r < 0) r += p;
    return static_cast<std::uint64_t>(r);
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    while (e) {
        if (e & 1) r = mul_mod(r, a, p);
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    return r;
}

std::uint64_t reduce(const Rational& q, std::uint64_t p) {
    const std::uint64_t num = mod_of(boost::multiprecision::numerator(q), p);
    const std::uint64_t den = mod_of(boost::multiprecision::denominator(q), p);
    return mul_mod(num, pow_mod(den, p - 2, p), p);
}

std::size_t rank_mod_p(std::vector<std::vector<std::uint64_t>> m, std::uint64_t p) {
    std::size_t rank = 0;
    const std::size_t cols = m.empty() ? 0 : m.front().size();
    for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
        std::size_t pivot = rank;
        while (pivot < m.size() && m[pivot][c] == 0) ++pivot;
        if (pivot == m.size()) continue;
        std::swap(m[rank], m[pivot]);
        const std::uint64_t inv = pow_mod(m[rank][c], p - 2, p);
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == rank || m[r][c] == 0) continue;
            const std::uint64_t f = mul_mod(m[r][c], inv, p);
            for (std::size_t k = c; k < cols; ++k) m[r][k] = (m[r][k] + p - mul_mod(f, m[rank][k], p)) % p;
        }
        ++rank;
    }
    return rank;
}

std::vector<Vector> drop_block(const Subgroup& h, std::uint64_t prime) {
    const std::size_t off = h.ambient.offset_of(prime);
    const std::size_t n = h.ambient.components()[h.ambient.index_of(prime)].rank;
    std::vector<Vector> out;
    for (const auto& g : h.generators) {
        Vector v;
        for (std::size_t i = 0; i < g.size(); ++i)
            if (i < off || i >= off + n) v.push_back(g[i]);
        out.push_back(std::move(v));
    }
    return out;
}

/// Integer vectors spanning {a : a.g = 0 for every row g}.
std::vector<std::vector<cpp_int>> integer_annihilator(const std::vector<Vector>& rows, std::size_t n) {
    std::vector<Vector> m = rows;
    std::vector<std::size_t> pivots;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < n && rank < m.size(); ++c) {
        std::size_t pivot = rank;
        while (pivot < m.size() && m[pivot][c] == 0) ++pivot;
        if (pivot == m.size()) continue;
        std::swap(m[rank], m[pivot]);
        const Rational lead = m[rank][c];
        for (auto& v : m[rank]) v /= lead;
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == rank || m[r][c] == 0) continue;
            const Rational f = m[r][c];
            for (std::size_t k = 0; k < n; ++k) m[r][k] -= f * m[rank][k];
        }
        pivots.push_back(c);
        ++rank;
    }
    std::vector<std::vector<cpp_int>> out;
    for (std::size_t f = 0; f < n; ++f) {
        if (std::find(pivots.begin(), pivots.end(), f) != pivots.end()) continue;
        Vector v(n, Rational(0));
        v[f] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m[i][f];
        cpp_int scale = 1;
        for (const auto& q : v) scale = boost::multiprecision::lcm(scale, boost::multiprecision::denominator(q));
        std::vector<cpp_int> iv;
        for (const auto& q : v) iv.push_back(boost::multiprecision::numerator(Rational(q * scale)));
        out.push_back(std::move(iv));
    }
    return out;
}

Rational parse_entry(const std::string& tok) {
    const auto slash = tok.find('/');
    try {
        if (slash == std::string::npos) return Rational(cpp_int(tok));
        cpp_int den(tok.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        return Rational(cpp_int(tok.substr(0, slash)), den);
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("bad vector entry: '" + tok + "'");
    }
}

}  // namespace

Ambient::Ambient(std::vector<Component> components) : components_(std::move(components)) {
    if (components_.empty()) throw std::invalid_argument("ambient needs at least one prime");
    std::sort(components_.begin(), components_.end(), [](auto& a, auto& b) { return a.prime < b.prime; });
    for (std::size_t i = 0; i < components_.size(); ++i) {
        const auto& c = components_[i];
        if (!is_prime(c.prime)) throw std::invalid_argument(std::to_string(c.prime) + " is not prime");
        if (c.prime >= (std::uint64_t{1} << 62)) throw std::invalid_argument("prime too large");
        if (c.rank == 0) throw std::invalid_argument("component rank must be positive");
        if (i > 0 && components_[i - 1].prime == c.prime)
            throw std::invalid_argument("prime " + std::to_string(c.prime) + " repeated");
        total_ += c.rank;
    }
}

std::size_t Ambient::index_of(std::uint64_t prime) const {
    for (std::size_t i = 0; i < components_.size(); ++i)
        if (components_[i].prime == prime) return i;
    throw std::out_of_range("prime " + std::to_string(prime) + " is not in the ambient " + to_string());
}

std::size_t Ambient::offset_of(std::uint64_t prime) const {
    const std::size_t idx = index_of(prime);
    std::size_t off = 0;
    for (std::size_t i = 0; i < idx; ++i) off += components_[i].rank;
    return off;
}

std::string Ambient::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < components_.size(); ++i) os << (i ? " " : "") << components_[i].prime << '^' << components_[i].rank;
    return os.str();
}

Subgroup::Subgroup(Ambient a, std::vector<Vector> gens) : ambient(std::move(a)), generators(std::move(gens)) {
    for (const auto& g : generators) {
        if (g.size() != ambient.total_rank())
            throw std::invalid_argument("generator has " + std::to_string(g.size()) + " entries, ambient rank is " +
                                        std::to_string(ambient.total_rank()));
        std::size_t i = 0;
        for (const auto& c : ambient.components())
            for (std::size_t k = 0; k < c.rank; ++k, ++i)
                if (boost::multiprecision::denominator(g[i]) % c.prime == 0)
                    throw std::invalid_argument("entry " + g[i].str() + " is not " + std::to_string(c.prime) +
                                                "-adically integral");
    }
}

std::size_t free_rank(const std::vector<Vector>& rows) {
    std::vector<Vector> m = rows;
    std::size_t rank = 0;
    const std::size_t cols = m.empty() ? 0 : m.front().size();
    for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
        std::size_t pivot = rank;
        while (pivot < m.size() && m[pivot][c] == 0) ++pivot;
        if (pivot == m.size()) continue;
        std::swap(m[rank], m[pivot]);
        for (std::size_t r = rank + 1; r < m.size(); ++r) {
            if (m[r][c] == 0) continue;
            const Rational f = m[r][c] / m[rank][c];
            for (std::size_t k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
        }
        ++rank;
    }
    return rank;
}

std::size_t free_rank(const Subgroup& h) { return free_rank(h.generators); }

std::size_t block_rank(const Subgroup& h, std::uint64_t prime) {
    return free_rank(h) - free_rank(drop_block(h, prime));
}

bool essential_in_component(const Subgroup& h, std::uint64_t prime) {
    return block_rank(h, prime) == h.ambient.components()[h.ambient.index_of(prime)].rank;
}

bool essential(const Subgroup& h) {
    for (const auto& c : h.ambient.components())
        if (!essential_in_component(h, c.prime)) return false;
    return true;
}

std::size_t mod_p_rank(const Subgroup& h, std::uint64_t prime) {
    const std::size_t off = h.ambient.offset_of(prime);
    const std::size_t n = h.ambient.components()[h.ambient.index_of(prime)].rank;
    std::vector<std::vector<std::uint64_t>> m;
    for (const auto& g : h.generators) {
        std::vector<std::uint64_t> row;
        for (std::size_t k = 0; k < n; ++k) row.push_back(reduce(g[off + k], prime));
        m.push_back(std::move(row));
    }
    return rank_mod_p(std::move(m), prime);
}

bool dense(const Subgroup& h) {
    for (const auto& c : h.ambient.components())
        if (mod_p_rank(h, c.prime) != c.rank) return false;
    return true;
}

std::string to_string(NotMinimalReason r) { return r == NotMinimalReason::NotDense ? "not-dense" : "not-essential"; }

MinimalityResult minimal_check(const Subgroup& h) {
    if (!dense(h)) return {false, NotMinimalReason::NotDense};
    if (!essential(h)) return {false, NotMinimalReason::NotEssential};
    return {true, std::nullopt};
}

Subgroup essential_closure(const Subgroup& h) {
    std::vector<Vector> gens = h.generators;
    std::size_t rank = free_rank(gens);
    if (rank != gens.size())
        throw std::invalid_argument("essential_closure needs independent generators (rank " + std::to_string(rank) +
                                    " < " + std::to_string(gens.size()) + ")");
    const std::size_t n = h.ambient.total_rank();
    for (std::size_t i = 0; i < n && rank < n; ++i) {
        Vector e(n, Rational(0));
        e[i] = 1;
        gens.push_back(e);
        if (free_rank(gens) == rank + 1)
            ++rank;
        else
            gens.pop_back();
    }
    return Subgroup(h.ambient, std::move(gens));
}

bool essential_oracle(const Subgroup& h, std::size_t samples, std::uint64_t seed, std::int64_t bound) {
    if (samples == 0) throw std::invalid_argument("essential_oracle needs at least one sample");
    if (bound < 1) throw std::invalid_argument("sample bound must be positive");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::int64_t> coord(-bound, bound);
    const std::size_t n = h.ambient.total_rank();

    // A multiple of x lies in H iff x is in the rational span of H, i.e. x is
    // orthogonal to an integer basis of the annihilator of that span.
    const auto annihilator = integer_annihilator(h.generators, n);
    std::vector<std::int64_t> x(n, 0);
    for (const auto& c : h.ambient.components()) {
        const std::size_t off = h.ambient.offset_of(c.prime);
        for (std::size_t s = 0; s < samples; ++s) {
            std::fill(x.begin(), x.end(), 0);
            bool nonzero = false;
            while (!nonzero)
                for (std::size_t k = 0; k < c.rank; ++k) {
                    x[off + k] = coord(rng);
                    nonzero = nonzero || x[off + k] != 0;
                }
            for (const auto& a : annihilator) {
                cpp_int dot = 0;
                for (std::size_t k = 0; k < c.rank; ++k) dot += a[off + k] * x[off + k];
                if (dot != 0) return false;
            }
        }
    }
    return true;
}

Subgroup parse_subgroup(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::optional<Ambient> ambient;
    std::vector<Vector> gens;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;
        if (!ambient) {
            if (tok != "ambient:") throw std::invalid_argument("line " + std::to_string(lineno) + ": expected 'ambient:'");
            std::vector<Ambient::Component> comps;
            while (ls >> tok) {
                const auto caret = tok.find('^');
                if (caret == std::string::npos)
                    throw std::invalid_argument("line " + std::to_string(lineno) + ": expected prime^rank, got '" + tok + "'");
                try {
                    comps.push_back({std::stoull(tok.substr(0, caret)), std::stoull(tok.substr(caret + 1))});
                } catch (const std::logic_error&) {
                    throw std::invalid_argument("line " + std::to_string(lineno) + ": bad component '" + tok + "'");
                }
            }
            ambient.emplace(std::move(comps));
            continue;
        }
        Vector v{parse_entry(tok)};
        while (ls >> tok) v.push_back(parse_entry(tok));
        gens.push_back(std::move(v));
    }
    if (!ambient) throw std::invalid_argument("missing 'ambient:' line");
    return Subgroup(*ambient, std::move(gens));
}

}  // namespace stoyanov::padic
