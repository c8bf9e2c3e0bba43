// semigroup.hpp
// The multiplicative semigroup <C> generated by the composite part of a
// coprime set, truncated at a bound x, and the reciprocal sums over it.

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "llike/rational.hpp"

namespace llike {

// (index into generators, exponent)
using ExponentVector = std::vector<std::pair<std::uint32_t, std::uint32_t>>;

struct SemigroupEnumeration {
    std::uint64_t bound = 1;
    std::vector<std::uint64_t> generators;  // C, ascending
    std::vector<std::uint64_t> elements;    // ascending, starts with 1
    std::vector<ExponentVector> exponents;  // parallel to elements

    std::size_t count() const { return elements.size(); }
};

// Bounded DFS over exponent vectors. C must be pairwise coprime composites
// (checked); x >= 1. Throws Overflow on a product wider than 64 bits and
// InvariantViolation if the count exceeds floor(sqrt(x)).
SemigroupEnumeration enumerate(std::span<const std::uint64_t> composites, std::uint64_t x);

// Elements whose exponents are all 1.
SemigroupEnumeration squarefree_part(const SemigroupEnumeration& e);

struct ReciprocalMass {
    RationalSum mass;  // I(x) = sum over <C>_x of 1/n
    // prod_{c in C} (1 + 1/(c - 1)); exact when it fits.
    std::optional<Rational> product_bound_exact;
    long double product_bound = 1.0L;
};

ReciprocalMass reciprocal_mass(const SemigroupEnumeration& e);

struct LcmMoment {
    RationalSum sum;  // sum over l-tuples of 1/lcm
    // prod_{c in C, c <= x} (1 + sum_{nu >= 1} (nu + 1)^l / c^nu)
    long double product_bound = 1.0L;
    u128 tuples = 0;
};

// 1 <= l <= 4, else ArityTooLarge (l > 4) or BadParams (l == 0).
LcmMoment lcm_moment(std::span<const std::uint64_t> composites, unsigned l, std::uint64_t x);

struct TailMass {
    std::uint64_t threshold = 1;
    RationalSum tail;            // sum over n in <C>_x, n > T of 1/n
    RationalSum mass;            // I(x)
    std::size_t tail_count = 0;  // elements above T
    double comparison = 0.0;     // T^{-1/2} * I(x), reported only
    double count_bound = 0.0;    // |<C>_x| / T, an upper bound on the tail
};

// Requires 1 <= T <= x.
TailMass tail_mass(const SemigroupEnumeration& e, std::uint64_t threshold);

} // namespace llike
