// coprime_set.hpp
// Generator sets A of pairwise coprime integers >= 2, materialized up to a
// working bound X_max, together with their split into the composite part
// C and the prime part P.
//
// Only generators <= n can affect omega_A(n) and Omega_A(n), so a set built
// for X_max answers every query with n <= X_max exactly.

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "llike/rational.hpp"

namespace llike {

// OMEGA counts generators dividing n; BIG_OMEGA sums nu over a^nu || n.
enum class Variant : std::uint8_t { omega = 0, big_omega = 1 };

std::string_view variant_name(Variant v);      // "omega" / "big-omega"
Variant parse_variant(std::string_view name);  // throws bad_params

class CoprimeSet {
public:
    const std::vector<std::uint64_t>& generators() const { return generators_; }
    Variant variant() const { return variant_; }
    const std::string& family() const { return family_; }
    std::uint64_t bound() const { return bound_; }
    std::size_t size() const { return generators_.size(); }

    // Generators <= limit (a prefix of generators()).
    std::span<const std::uint64_t> generators_up_to(std::uint64_t limit) const;

    // Same generators under the other variant.
    CoprimeSet with_variant(Variant v) const;

private:
    friend CoprimeSet validate(std::vector<std::uint64_t>, Variant, std::uint64_t, std::string);
    friend CoprimeSet make_trusted_set(std::vector<std::uint64_t>, Variant, std::uint64_t,
                                       std::string);

    std::vector<std::uint64_t> generators_;
    Variant variant_ = Variant::big_omega;
    std::string family_;
    std::uint64_t bound_ = 0;
};

// Sorts the list and checks every invariant. Pairwise coprimality is
// checked by per-prime exclusivity: each prime may divide at most one
// generator. Throws NotCoprime(a,b) naming the smallest shared prime's
// pair, ElementTooSmall for entries < 2, SetBoundExceeded for entries
// > bound, EmptySet for an empty list.
CoprimeSet validate(std::vector<std::uint64_t> generators, Variant variant, std::uint64_t bound,
                    std::string family = "user");

// Skips validation; for generators that are pairwise coprime by
// construction (e.g. straight out of a prime sieve).
CoprimeSet make_trusted_set(std::vector<std::uint64_t> generators, Variant variant,
                            std::uint64_t bound, std::string family);

struct FamilyParams {
    // augmented-primes: composites injected into the primes; their prime
    // factors are removed from the prime part.
    std::vector<std::uint64_t> inject;
};

// name in {"all-primes", "augmented-primes", "sparse-primes"}.
//
// Divergence of sum 1/a holds for every family: all-primes by Euler,
// augmented-primes since finitely many primes are removed, sparse-primes
// since the selected indices have density 1/floor(log2 log2(n+16)).
CoprimeSet builtin_family(std::string_view name, const FamilyParams& params, std::uint64_t bound,
                          Variant variant = Variant::big_omega);

// 1-based prime index rule for sparse-primes: keep p_n iff
// floor(log2 log2(n + 16)) divides n.
bool sparse_primes_keeps(std::uint64_t index);

// Reads one generator per line; '#' starts a comment; blank lines ignored.
std::vector<std::uint64_t> read_set_file(const std::string& path);

struct Decomposition {
    std::vector<std::uint64_t> composites;  // C, ascending
    std::vector<std::uint64_t> primes;      // P, ascending
    // spf[i] is the least prime factor of composites[i].
    std::vector<std::uint64_t> spf;
    // (prime q, composite owning q) for every prime factor of every
    // composite, sorted by q. Each q owns at most one composite.
    std::vector<std::pair<std::uint64_t, std::uint64_t>> composite_prime_owner;
    RationalSum recip_sum_C;
    RationalSum recip_sum_P;

    bool is_prime_generator(std::uint64_t p) const;
    // Least prime factor of composite c (must be in C).
    std::uint64_t spf_of(std::uint64_t c) const;
    // The generator divisible by prime q, if any.
    std::optional<std::uint64_t> generator_owning(std::uint64_t q) const;
};

Decomposition decompose(const CoprimeSet& set);

// iota(prod c_j^nu_j) = prod p_{c_j}^{2 nu_j}. Throws NotInSemigroup when m
// has a factor outside <C>.
std::uint64_t iota(std::uint64_t m, const Decomposition& dec);

} // namespace llike
