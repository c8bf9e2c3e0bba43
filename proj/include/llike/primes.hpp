// primes.hpp
// Prime utilities used throughout: deterministic Miller-Rabin for 64-bit
// inputs, a segmented odd-only Eratosthenes enumerator, and trial-division
// factorization for the per-integer (non-sieve) code paths.

#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace llike {

std::uint64_t isqrt(std::uint64_t n);

// Deterministic for every n < 2^64.
bool is_prime(std::uint64_t n);

// All primes p <= n in ascending order.
std::vector<std::uint64_t> primes_up_to(std::uint64_t n);

// Prime factorization by trial division, ascending (prime, exponent) pairs.
// Intended for n up to ~2^42; cost is O(sqrt(n)) in the worst case.
std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n);

std::uint64_t smallest_prime_factor(std::uint64_t n);

} // namespace llike
