// estimators.hpp
// Exact summatory values of lambda_A and of its k-point correlations
//   S_k(x) = (1/x) sum_{n <= x} prod_i lambda_A(a_i n + h_i),
// emitted along a grid of x values from a single sieve pass, plus the
// split of the mean over n_C in <C>_x used by the truncation diagnostic.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "llike/coprime_set.hpp"
#include "llike/semigroup.hpp"
#include "llike/sieve.hpp"

namespace llike {

struct CorrelationSpec {
    std::vector<std::uint64_t> coeffs;  // a_i >= 1
    std::vector<std::uint64_t> shifts;  // h_i >= 0

    std::size_t k() const { return coeffs.size(); }
    bool is_mean() const { return k() == 1 && coeffs[0] == 1 && shifts[0] == 0; }
    std::string str() const;
};

// Throws BadParams for mismatched/empty vectors or a zero coefficient, and
// DegenerateSpec when k >= 2 and a_i h_j == a_j h_i for some i != j.
CorrelationSpec make_correlation_spec(std::vector<std::uint64_t> coeffs,
                                      std::vector<std::uint64_t> shifts);

inline CorrelationSpec mean_spec() { return {{1}, {0}}; }

struct Estimate {
    std::uint64_t x = 0;
    std::int64_t count = 0;  // exact signed sum
    double value = 0.0;      // count / x
};

struct ConvergenceReport {
    std::string set_descriptor;
    Variant variant = Variant::big_omega;
    CorrelationSpec spec;
    std::vector<std::uint64_t> grid;
    std::vector<std::int64_t> counts;
    std::vector<double> values;

    Estimate at(std::size_t i) const { return {grid[i], counts[i], values[i]}; }
};

// Sum of lambda_A(n) for n <= x through the segmented parity sieve.
Estimate mean(const CoprimeSet& set, std::uint64_t x, const SieveOptions& opts = {});

// Sieves [1, max_i(a_i x + h_i)] once into a lambda plane and strides it.
Estimate correlate(const CoprimeSet& set, const CorrelationSpec& spec, std::uint64_t x,
                   const SieveOptions& opts = {});

// Grid must be non-empty, strictly ascending and start at >= 1. The mean
// spec takes the plane-free segmented path.
ConvergenceReport convergence_grid(const CoprimeSet& set, const CorrelationSpec& spec,
                                   const std::vector<std::uint64_t>& grid,
                                   const SieveOptions& opts = {});

struct TruncationTerm {
    std::uint64_t n_c = 1;
    int lambda_c = 1;
    std::int64_t inner = 0;  // sum_{m <= x / n_C} lambda~_P(m)
    double contribution = 0.0;  // lambda_c * inner / x
    double inner_average = 0.0;  // |inner| * n_C / x, at most 1
};

struct TruncationReport {
    std::uint64_t x = 0;
    std::uint64_t threshold = 0;
    std::vector<TruncationTerm> terms;  // one per n_C in <C>_x, ascending
    std::int64_t total_count = 0;       // sum of lambda_c * inner
    std::int64_t direct_count = 0;      // sum_{n <= x} lambda_A(n)
    std::int64_t tail_count = 0;        // terms with n_C > T
    double tail_value = 0.0;            // tail_count / x
    double max_tail_inner_average = 0.0;
    TailMass tail;
    double tail_bound = 0.0;  // tail mass * max_tail_inner_average

    bool matches() const { return total_count == direct_count; }
    bool tail_bounded() const;
};

// Requires 1 <= T <= x <= set.bound().
TruncationReport truncation_diagnostic(const CoprimeSet& set, const Decomposition& dec,
                                       std::uint64_t x, std::uint64_t threshold,
                                       const SieveOptions& opts = {});

} // namespace llike
