#include "stoyanov/covering.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <cstdlib>
#include <optional>
#include <regex>
#include <set>
#include <sstream>

namespace stoyanov::covering {

namespace {

void check_range(std::size_t s, std::size_t t) {
    if (t < 1 || t > s)
        throw std::invalid_argument("need 1 <= t <= s, got s=" + std::to_string(s) + " t=" + std::to_string(t));
}

std::vector<std::uint64_t> subsets_of_size(std::size_t s, std::size_t t) {
    // Gosper's hack: masks with t bits set, in increasing order.
    std::vector<std::uint64_t> out;
    const std::uint64_t limit = std::uint64_t{1} << s;
    for (std::uint64_t m = (std::uint64_t{1} << t) - 1; m < limit;) {
        out.push_back(m);
        const std::uint64_t low = m & -m;
        const std::uint64_t ripple = m + low;
        if (ripple == 0) break;
        m = ripple | (((m ^ ripple) >> 2) / low);
    }
    return out;
}

/// Pattern of `row` on the coordinates of `subset`, packed low to high.
std::uint64_t pattern(std::uint64_t row, std::uint64_t subset) {
    std::uint64_t p = 0;
    std::size_t k = 0;
    for (std::uint64_t m = subset; m; m &= m - 1, ++k)
        if (row & (m & -m)) p |= std::uint64_t{1} << k;
    return p;
}

/// Exact search for a t-dense family of a given size. Requirement (A, phi)
/// has index a * 2^t + phi; a row covers one requirement per subset.
class Search {
public:
    Search(std::size_t s, std::size_t t) : s_(s), t_(t), subsets_(subsets_of_size(s, t)) {
        const std::size_t per = std::size_t{1} << t;
        reqs_ = subsets_.size() * per;
        words_ = (reqs_ + 63) / 64;
        const std::uint64_t nrows = std::uint64_t{1} << s;
        cover_.assign(nrows, std::vector<std::uint64_t>(words_, 0));
        for (std::uint64_t r = 0; r < nrows; ++r)
            for (std::size_t a = 0; a < subsets_.size(); ++a) {
                const std::size_t idx = a * per + pattern(r, subsets_[a]);
                cover_[r][idx / 64] |= std::uint64_t{1} << (idx % 64);
            }
    }

    std::optional<std::vector<std::uint64_t>> find(std::size_t size) {
        chosen_.clear();
        std::vector<std::uint64_t> covered(words_, 0);
        std::vector<char> banned(std::size_t{1} << s_, 0);
        // Translating every row by a fixed vector preserves density, so some
        // optimal family contains the zero row.
        add(covered, 0);
        chosen_.push_back(0);
        banned[0] = 1;
        if (dfs(covered, banned, size)) return chosen_;
        return std::nullopt;
    }

private:
    void add(std::vector<std::uint64_t>& covered, std::uint64_t row) const {
        for (std::size_t w = 0; w < words_; ++w) covered[w] |= cover_[row][w];
    }

    bool is_covered(const std::vector<std::uint64_t>& covered, std::size_t idx) const {
        return (covered[idx / 64] >> (idx % 64)) & 1;
    }

    /// Largest number of patterns still missing on a single subset.
    std::size_t deficit(const std::vector<std::uint64_t>& covered) const {
        const std::size_t per = std::size_t{1} << t_;
        std::size_t worst = 0;
        for (std::size_t a = 0; a < subsets_.size(); ++a) {
            std::size_t missing = 0;
            for (std::size_t phi = 0; phi < per; ++phi) missing += !is_covered(covered, a * per + phi);
            worst = std::max(worst, missing);
        }
        return worst;
    }

    bool dfs(const std::vector<std::uint64_t>& covered, std::vector<char>& banned, std::size_t size) {
        const std::size_t left = size - chosen_.size();
        const std::size_t need = deficit(covered);
        if (need == 0) return true;
        if (need > left) return false;

        std::size_t first = 0;
        while (is_covered(covered, first)) ++first;
        const std::size_t per = std::size_t{1} << t_;
        const std::uint64_t subset = subsets_[first / per];
        const std::uint64_t phi = first % per;

        std::vector<std::uint64_t> tried;
        bool found = false;
        for (std::uint64_t r = 0; r < (std::uint64_t{1} << s_) && !found; ++r) {
            if (banned[r] || pattern(r, subset) != phi) continue;
            std::vector<std::uint64_t> next = covered;
            add(next, r);
            chosen_.push_back(r);
            banned[r] = 1;
            if (dfs(next, banned, size)) {
                found = true;
            } else {
                chosen_.pop_back();
                tried.push_back(r);  // stays banned for the remaining siblings
            }
        }
        for (auto r : tried) banned[r] = 0;
        return found;
    }

    std::size_t s_, t_;
    std::vector<std::uint64_t> subsets_;
    std::size_t reqs_ = 0, words_ = 0;
    std::vector<std::vector<std::uint64_t>> cover_;
    std::vector<std::uint64_t> chosen_;
};

void check_caps(std::size_t s, std::size_t t, const Caps& caps) {
    check_range(s, t);
    if (s > caps.s || t > caps.t)
        throw CapExceeded("cap exceeded: s=" + std::to_string(s) + " t=" + std::to_string(t) + " is above the search caps s<=" +
                          std::to_string(caps.s) + " t<=" + std::to_string(caps.t));
}

}  // namespace

Family::Family(std::size_t width, std::vector<std::uint64_t> rows) : width_(width), rows_(std::move(rows)) {
    if (width_ == 0 || width_ > 63) throw std::invalid_argument("family width must be in 1..63");
    std::set<std::uint64_t> seen;
    for (auto r : rows_) {
        if (r >> width_) throw std::invalid_argument("row wider than the family");
        if (!seen.insert(r).second) throw std::invalid_argument("duplicate row in family");
    }
}

std::string Family::to_string() const {
    std::string out;
    for (auto r : rows_) {
        for (std::size_t i = 0; i < width_; ++i) out += ((r >> i) & 1) ? '1' : '0';
        out += '\n';
    }
    return out;
}

Family parse_family(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::optional<std::size_t> width;
    std::vector<std::uint64_t> rows;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        line.erase(std::remove_if(line.begin(), line.end(), [](unsigned char c) { return std::isspace(c); }), line.end());
        if (line.empty()) continue;
        if (!width) width = line.size();
        if (line.size() != *width)
            throw std::invalid_argument("line " + std::to_string(lineno) + ": row length differs from the first row");
        std::uint64_t r = 0;
        for (std::size_t i = 0; i < line.size(); ++i) {
            if (line[i] != '0' && line[i] != '1')
                throw std::invalid_argument("line " + std::to_string(lineno) + ": rows are made of 0 and 1");
            if (line[i] == '1') r |= std::uint64_t{1} << i;
        }
        rows.push_back(r);
    }
    if (!width) throw std::invalid_argument("empty family");
    return Family(*width, std::move(rows));
}

bool is_t_dense(const Family& f, std::size_t t) {
    check_range(f.width(), t);
    if (t > 6) {
        // 2^t patterns no longer fit a 64-bit mask.
        for (auto subset : subsets_of_size(f.width(), t)) {
            std::set<std::uint64_t> seen;
            for (auto r : f.rows()) seen.insert(pattern(r, subset));
            if (seen.size() != (std::uint64_t{1} << t)) return false;
        }
        return true;
    }
    const std::uint64_t npat = std::uint64_t{1} << t;
    const std::uint64_t full = npat == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << npat) - 1;
    for (auto subset : subsets_of_size(f.width(), t)) {
        std::uint64_t seen = 0;
        for (auto r : f.rows()) seen |= std::uint64_t{1} << pattern(r, subset);
        if (seen != full) return false;
    }
    return true;
}

Caps caps_from_env() {
    Caps caps;
    const char* env = std::getenv("STOYANOV_CAPS");
    if (!env) return caps;
    static const std::regex item(R"(\s*([st])\s*=\s*(\d+)\s*)");
    std::string text(env);
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) {
        std::smatch m;
        if (!std::regex_match(part, m, item))
            throw std::invalid_argument("STOYANOV_CAPS: expected s=<n>,t=<n>, got '" + text + "'");
        const auto v = static_cast<std::size_t>(std::stoul(m[2]));
        (m[1] == "s" ? caps.s : caps.t) = v;
    }
    if (caps.s > 20) throw std::invalid_argument("STOYANOV_CAPS: s above 20 is not supported");
    return caps;
}

Family optimal_family(std::size_t s, std::size_t t, const Caps& caps) {
    check_caps(s, t, caps);
    Search search(s, t);
    for (std::size_t size = lower_bound(s, t);; ++size)
        if (auto rows = search.find(size)) {
            std::sort(rows->begin(), rows->end());
            return Family(s, *rows);
        }
}

std::uint64_t m_fin(std::size_t s, std::size_t t, const Caps& caps) { return optimal_family(s, t, caps).size(); }

std::uint64_t lower_bound(std::size_t s, std::size_t t) {
    check_range(s, t);
    if (t >= 64) throw std::overflow_error("2^t does not fit in 64 bits");
    return std::uint64_t{1} << t;
}

}  // namespace stoyanov::covering
