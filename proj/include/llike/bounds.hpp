// bounds.hpp
// Numeric side of the analytic inputs: reciprocal sums over the prime
// part P, the Hall-Tenenbaum style mean-value bound
//   x * exp(-2K * sum_{p <= x, p in P} 1/p)
// compared against the measured |sum_{n <= x} lambda_P(n)|, and the
// distance sum sum_{y < p <= x, p in P} 2/p (the plain sum, no square root).

#pragma once

#include <cstdint>
#include <span>

#include "llike/coprime_set.hpp"
#include "llike/rational.hpp"
#include "llike/sieve.hpp"

namespace llike {

// P ascending. Exact while the denominators fit in 128 bits.
RationalSum prime_reciprocal_sum(std::span<const std::uint64_t> primes, std::uint64_t x);

// Requires 1 <= y <= x.
RationalSum distance_sum(std::span<const std::uint64_t> primes, std::uint64_t y, std::uint64_t x);

struct BoundReport {
    std::uint64_t x = 0;
    double K = 1.0;
    RationalSum recip_sum;
    double ht_bound = 0.0;
    std::int64_t empirical_sum = 0;    // sum_{n <= x} lambda_P(n)
    std::uint64_t empirical = 0;       // its absolute value
    double ratio = 0.0;                // empirical / ht_bound
};

// Diagnostic only: no inequality is asserted. K > 0, x <= set.bound().
BoundReport hall_tenenbaum_bound(const CoprimeSet& set, const Decomposition& dec, std::uint64_t x,
                                 double K = 1.0, const SieveOptions& opts = {});

} // namespace llike
