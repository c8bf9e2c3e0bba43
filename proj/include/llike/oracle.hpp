// oracle.hpp
// Brute-force reference values and the randomized self-check driven by
// `llike verify`. The oracle walks every generator a <= n and tests a | n,
// sharing no code with the sieve or the factorization-based paths.

#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "llike/coprime_set.hpp"
#include "llike/sieve.hpp"

namespace llike {

Counts trial_division_counts(std::span<const std::uint64_t> generators, std::uint64_t n);

// A valid set mixing 1-4 composites (products of small primes, or prime
// powers) with a random fraction of the remaining primes <= bound.
CoprimeSet random_coprime_set(std::mt19937_64& rng, std::uint64_t bound, Variant variant);

struct VerifySummary {
    std::uint64_t sets = 0;  // set/variant pairs checked
    std::uint64_t integers = 0;
    std::uint64_t oracle_mismatches = 0;
    std::uint64_t n_c_mismatches = 0;
    std::uint64_t additivity_failures = 0;
    std::uint64_t convolution_failures = 0;
    std::vector<std::string> first_failures;  // up to 10

    std::uint64_t failures() const {
        return oracle_mismatches + n_c_mismatches + additivity_failures + convolution_failures;
    }
    bool ok() const { return failures() == 0; }
};

// For nsets random sets, both variants, every n <= nmax: sieve vs oracle
// (omega, Omega, lambda), the n_C plane vs per-n extraction, additivity of
// the counts over C and P, and the divisor-sum identity with its single
// nonzero term at d = n_C.
VerifySummary run_verification(std::uint64_t seed, std::uint64_t nmax, unsigned nsets,
                               const SieveOptions& opts = {});

} // namespace llike
