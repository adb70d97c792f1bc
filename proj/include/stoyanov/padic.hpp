#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace stoyanov::padic {

using Rational = boost::multiprecision::cpp_rational;
using Vector = std::vector<Rational>;

/// K = prod_p Z_p^{n_p} over finitely many distinct primes, coordinates
/// ordered by ascending prime and then component index.
class Ambient {
public:
    struct Component {
        std::uint64_t prime;
        std::size_t rank;
    };

    /// Throws std::invalid_argument on non-primes, repeated primes or zero ranks.
    explicit Ambient(std::vector<Component> components);

    const std::vector<Component>& components() const { return components_; }
    std::size_t total_rank() const { return total_; }
    /// Throws std::out_of_range for a prime outside the ambient.
    std::size_t index_of(std::uint64_t prime) const;
    /// First coordinate of the component for `prime`.
    std::size_t offset_of(std::uint64_t prime) const;
    std::string to_string() const;

private:
    std::vector<Component> components_;
    std::size_t total_ = 0;
};

/// Subgroup of K generated by finitely many rational vectors. Entries in the
/// p-block must have denominators prime to p, so every generator is a point
/// of K.
struct Subgroup {
    Ambient ambient;
    std::vector<Vector> generators;

    /// Throws std::invalid_argument on length or denominator violations.
    Subgroup(Ambient a, std::vector<Vector> gens);
};

std::size_t free_rank(const std::vector<Vector>& rows);
std::size_t free_rank(const Subgroup& h);

/// Rank of H intersected with the p-block, i.e. rank(H) minus the rank of
/// the projection of H away from the p-block.
std::size_t block_rank(const Subgroup& h, std::uint64_t prime);

/// H meets every nonzero closed subgroup Z_p x (x a rational vector of the
/// p-block) exactly when H contains a full-rank lattice of that block.
bool essential_in_component(const Subgroup& h, std::uint64_t prime);
bool essential(const Subgroup& h);

/// Rank over Z/p of the p-block projections of the generators.
std::size_t mod_p_rank(const Subgroup& h, std::uint64_t prime);
bool dense(const Subgroup& h);

enum class NotMinimalReason { NotDense, NotEssential };

struct MinimalityResult {
    bool minimal = false;
    std::optional<NotMinimalReason> reason;
};

std::string to_string(NotMinimalReason r);

/// Density is checked first; the reason names the first failing side.
MinimalityResult minimal_check(const Subgroup& h);

/// Extends independent generators by standard basis vectors until H is
/// essential. The input generators stay as a prefix. Throws
/// std::invalid_argument on dependent input.
Subgroup essential_closure(const Subgroup& h);

/// Randomized check: for each prime, draws `samples` nonzero integer vectors x
/// in the p-block with coordinates in [-bound, bound] and tests whether some
/// nonzero multiple of x lies in H. Deterministic in `seed`.
bool essential_oracle(const Subgroup& h, std::size_t samples, std::uint64_t seed, std::int64_t bound = 9);

/// `ambient: 2^2 3^1` followed by one generator per line; entries are
/// integers or fractions a/b. Blank lines and `#` comments are ignored.
Subgroup parse_subgroup(std::string_view text);

}  // namespace stoyanov::padic
