#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace stoyanov::covering {

/// Set of binary rows of a fixed width, each row stored as a bit mask with
/// coordinate i in bit i.
class Family {
public:
    /// Throws std::invalid_argument on width > 63, rows out of range or duplicates.
    Family(std::size_t width, std::vector<std::uint64_t> rows);

    std::size_t width() const { return width_; }
    const std::vector<std::uint64_t>& rows() const { return rows_; }
    std::size_t size() const { return rows_.size(); }

    /// One row per line, coordinate 0 first.
    std::string to_string() const;

private:
    std::size_t width_;
    std::vector<std::uint64_t> rows_;
};

/// Rows of `0`/`1` characters, one per line; blank lines and `#` comments skipped.
Family parse_family(std::string_view text);

/// Every t coordinates see all 2^t patterns. Throws std::invalid_argument
/// unless 1 <= t <= width.
bool is_t_dense(const Family& f, std::size_t t);

struct Caps {
    std::size_t s = 6;
    std::size_t t = 3;
};

/// Defaults, overridden by STOYANOV_CAPS="s=7,t=4" when set.
Caps caps_from_env();

class CapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Least size of a t-dense family of width s, by exact branch and bound.
/// Throws CapExceeded above the caps and std::invalid_argument unless 1 <= t <= s.
std::uint64_t m_fin(std::size_t s, std::size_t t, const Caps& caps = caps_from_env());

/// A t-dense family of size m_fin(s, t).
Family optimal_family(std::size_t s, std::size_t t, const Caps& caps = caps_from_env());

/// 2^t, a lower bound for m_fin(s, t).
std::uint64_t lower_bound(std::size_t s, std::size_t t);

}  // namespace stoyanov::covering
