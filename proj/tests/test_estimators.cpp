#include <gtest/gtest.h>

#include <random>

#include "brute.hpp"
#include "llike/error.hpp"
#include "llike/estimators.hpp"
#include "llike/oracle.hpp"

using namespace llike;
using V = std::vector<std::uint64_t>;

namespace {

CoprimeSet augmented6(std::uint64_t bound, Variant v = Variant::big_omega) {
    FamilyParams p;
    p.inject = {6};
    return builtin_family("augmented-primes", p, bound, v);
}

std::int64_t naive_correlation(const V& gens, bool omega, const CorrelationSpec& spec, std::uint64_t x) {
    std::int64_t sum = 0;
    for (std::uint64_t n = 1; n <= x; ++n) {
        int prod = 1;
        for (std::size_t i = 0; i < spec.k(); ++i)
            prod *= brute::lambda(gens, spec.coeffs[i] * n + spec.shifts[i], omega);
        sum += prod;
    }
    return sum;
}

} // namespace

TEST(Spec, Validation) {
    EXPECT_NO_THROW(make_correlation_spec({1, 1}, {1, 2}));
    EXPECT_NO_THROW(make_correlation_spec({1}, {0}));
    EXPECT_NO_THROW(make_correlation_spec({1, 2}, {0, 1}));
    try {
        make_correlation_spec({1, 2}, {1, 2});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::degenerate_spec);
    }
    EXPECT_THROW(make_correlation_spec({1, 1}, {0, 0}), Error);
    EXPECT_THROW(make_correlation_spec({1, 1}, {3}), Error);
    EXPECT_THROW(make_correlation_spec({0}, {1}), Error);
    EXPECT_THROW(make_correlation_spec({}, {}), Error);
}

TEST(Mean, Examples) {
    const CoprimeSet primes = builtin_family("all-primes", {}, 1000);
    const Estimate m10 = mean(primes, 10);
    EXPECT_EQ(m10.count, 0);
    EXPECT_EQ(m10.value, 0.0);
    const Estimate m1 = mean(primes, 1);
    EXPECT_EQ(m1.count, 1);
    EXPECT_EQ(m1.value, 1.0);
}

TEST(Mean, MatchesBruteForceAcrossSegmentations) {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 6; ++trial) {
        const CoprimeSet s = random_coprime_set(rng, 30000, trial % 2 ? Variant::omega : Variant::big_omega);
        std::int64_t expect = 0;
        for (std::uint64_t n = 1; n <= 30000; ++n)
            expect += brute::lambda(s.generators(), n, s.variant() == Variant::omega);
        for (std::uint64_t seg : {64ULL, 1000ULL, 1ULL << 22}) {
            SieveOptions o;
            o.segment_len = seg;
            o.workers = 3;
            const Estimate e = mean(s, 30000, o);
            EXPECT_EQ(e.count, expect);
            EXPECT_EQ(e.value, double(expect) / 30000.0);
        }
    }
}

TEST(Correlate, ConsecutiveLiouvilleAtEight) {
    const CoprimeSet primes = builtin_family("all-primes", {}, 100);
    const Estimate e = correlate(primes, make_correlation_spec({1, 1}, {1, 2}), 8);
    EXPECT_EQ(e.count, -2);
    EXPECT_EQ(e.value, -0.25);
    // Hand expansion: lambda(2..10) = -1,-1,1,-1,1,-1,-1,1,1
    const std::vector<int> lam{-1, -1, 1, -1, 1, -1, -1, 1, 1};
    int s = 0;
    for (int i = 0; i < 8; ++i) s += lam[i] * lam[i + 1];
    EXPECT_EQ(s, -2);
}

TEST(Correlate, DegenerateSpecIsRejected) {
    const CoprimeSet primes = builtin_family("all-primes", {}, 100);
    EXPECT_THROW(correlate(primes, CorrelationSpec{{1, 2}, {1, 2}}, 10), Error);
}

TEST(Correlate, ReducesToMean) {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 4; ++trial) {
        const CoprimeSet s = random_coprime_set(rng, 50000, Variant::big_omega);
        for (std::uint64_t x : {1ULL, 10ULL, 4097ULL, 50000ULL}) {
            const Estimate a = mean(s, x), b = correlate(s, mean_spec(), x);
            EXPECT_EQ(a.count, b.count);
            EXPECT_EQ(a.value, b.value);
        }
    }
}

TEST(Correlate, MatchesNaiveDoubleLoop) {
    std::mt19937_64 rng(31);
    const std::vector<CorrelationSpec> specs = {
        make_correlation_spec({1, 1}, {1, 2}), make_correlation_spec({1, 1, 1}, {0, 1, 2}),
        make_correlation_spec({2, 3}, {1, 0}), make_correlation_spec({1, 5, 7}, {3, 0, 11}),
        make_correlation_spec({3}, {2})};
    for (int trial = 0; trial < 5; ++trial) {
        const CoprimeSet s = random_coprime_set(rng, 8000, trial % 2 ? Variant::omega : Variant::big_omega);
        for (const auto& spec : specs) {
            const std::uint64_t x = 1000;
            const Estimate e = correlate(s, spec, x);
            EXPECT_EQ(e.count, naive_correlation(s.generators(), s.variant() == Variant::omega, spec, x))
                << s.family() << ' ' << spec.str();
        }
    }
}

TEST(Correlate, BoundChecks) {
    const CoprimeSet primes = builtin_family("all-primes", {}, 100);
    try {
        correlate(primes, make_correlation_spec({1, 1}, {1, 2}), 99);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::set_bound_exceeded);
    }
    EXPECT_NO_THROW(correlate(primes, make_correlation_spec({1, 1}, {1, 2}), 98));
}

TEST(Grid, PrefixSumsEqualIndependentRuns) {
    const CoprimeSet primes = builtin_family("all-primes", {}, 300000);
    const V grid{10, 100, 1000, 4096, 4097, 100000};
    SieveOptions o;
    o.segment_len = 4096;
    o.workers = 2;
    const ConvergenceReport r = convergence_grid(primes, mean_spec(), grid, o);
    ASSERT_EQ(r.counts.size(), grid.size());
    EXPECT_EQ(r.values[0], 0.0);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        EXPECT_EQ(r.counts[i], mean(primes, grid[i]).count);
        EXPECT_EQ(r.values[i], double(r.counts[i]) / double(grid[i]));
        EXPECT_LE(std::abs(r.values[i]), 1.0);
    }
    const auto spec = make_correlation_spec({1, 1}, {1, 2});
    const ConvergenceReport c = convergence_grid(primes, spec, grid, o);
    for (std::size_t i = 0; i < grid.size(); ++i) EXPECT_EQ(c.counts[i], correlate(primes, spec, grid[i]).count);

    const ConvergenceReport single = convergence_grid(primes, spec, {1000});
    EXPECT_EQ(single.counts[0], correlate(primes, spec, 1000).count);
    EXPECT_THROW(convergence_grid(primes, spec, {100, 10}), Error);
    EXPECT_THROW(convergence_grid(primes, spec, {}), Error);
}

TEST(Grid, SegmentPartitionsAgreeForCorrelations) {
    const CoprimeSet s = builtin_family("sparse-primes", {}, 400000);
    const auto spec = make_correlation_spec({1, 2}, {1, 3});
    const V grid{1000, 50000, 150000};
    SieveOptions a, b;
    a.segment_len = 1 << 22;
    b.segment_len = 640;
    b.workers = 5;
    EXPECT_EQ(convergence_grid(s, spec, grid, a).counts, convergence_grid(s, spec, grid, b).counts);
}

TEST(Truncation, EmptyCompositePart) {
    const CoprimeSet primes = builtin_family("all-primes", {}, 10000);
    const Decomposition d = decompose(primes);
    const TruncationReport r = truncation_diagnostic(primes, d, 10000, 10);
    ASSERT_EQ(r.terms.size(), 1u);
    EXPECT_EQ(r.terms[0].n_c, 1u);
    EXPECT_EQ(r.total_count, mean(primes, 10000).count);
    EXPECT_TRUE(r.matches());
    EXPECT_EQ(r.tail_count, 0);
}

TEST(Truncation, AugmentedSetAtHundred) {
    const CoprimeSet s = augmented6(100);
    const Decomposition d = decompose(s);
    const TruncationReport r = truncation_diagnostic(s, d, 100, 6);
    ASSERT_EQ(r.terms.size(), 3u);
    EXPECT_EQ(r.terms[0].n_c, 1u);
    EXPECT_EQ(r.terms[1].n_c, 6u);
    EXPECT_EQ(r.terms[2].n_c, 36u);
    EXPECT_TRUE(r.matches());
    // Only n_C = 36 lies above T = 6.
    EXPECT_EQ(r.tail_count, r.terms[2].lambda_c * r.terms[2].inner);
    EXPECT_EQ(r.tail.tail_count, 1u);
    EXPECT_TRUE(r.tail_bounded());

    // Inner sums against the definition of lambda~_P.
    for (const auto& t : r.terms) {
        std::int64_t inner = 0;
        for (std::uint64_t m = 1; m <= 100 / t.n_c; ++m) {
            if (m % 6 == 0) continue;
            inner += brute::lambda(d.primes, m, false);
        }
        EXPECT_EQ(t.inner, inner) << t.n_c;
    }
    EXPECT_EQ(truncation_diagnostic(s, d, 100, 100).tail_count, 0);
}

TEST(Truncation, ReproducesMeanOnRandomSets) {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 8; ++trial) {
        const CoprimeSet s = random_coprime_set(rng, 60000, trial % 2 ? Variant::omega : Variant::big_omega);
        const Decomposition d = decompose(s);
        SieveOptions o;
        o.segment_len = 5000;
        o.workers = 2;
        for (std::uint64_t T : {1ULL, 36ULL, 1000ULL}) {
            const TruncationReport r = truncation_diagnostic(s, d, 60000, T, o);
            EXPECT_TRUE(r.matches()) << s.family();
            EXPECT_TRUE(r.tail_bounded()) << s.family();
            for (const auto& t : r.terms) EXPECT_LE(t.inner_average, 1.0);
        }
    }
}
