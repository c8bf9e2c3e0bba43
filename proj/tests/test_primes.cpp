#include <gtest/gtest.h>

#include "brute.hpp"
#include "llike/primes.hpp"

using namespace llike;

TEST(Primes, MillerRabinMatchesTrialDivisionBelow100k) {
    for (std::uint64_t n = 0; n < 100000; ++n) ASSERT_EQ(is_prime(n), brute::is_prime(n)) << n;
}

TEST(Primes, StrongPseudoprimesAreRejected) {
    // Smallest strong pseudoprimes to the leading prime bases; each one sits
    // right at a base-count threshold.
    EXPECT_FALSE(is_prime(2047));
    EXPECT_FALSE(is_prime(3215031751ULL));
    EXPECT_FALSE(is_prime(2152302898747ULL));
    EXPECT_FALSE(is_prime(3474749660383ULL));
    EXPECT_FALSE(is_prime(341550071728321ULL));
    EXPECT_FALSE(is_prime(3825123056546413051ULL));
    EXPECT_FALSE(is_prime(561));  // Carmichael
}

TEST(Primes, LargePrimes) {
    EXPECT_TRUE(is_prime(2305843009213693951ULL));  // 2^61 - 1
    EXPECT_TRUE(is_prime(1099511627791ULL));        // smallest prime above 2^40
    EXPECT_TRUE(is_prime(18446744073709551557ULL)); // largest prime below 2^64
    EXPECT_FALSE(is_prime(1099511627776ULL));
}

TEST(Primes, SegmentedSieveCounts) {
    EXPECT_TRUE(primes_up_to(1).empty());
    EXPECT_EQ(primes_up_to(2), (std::vector<std::uint64_t>{2}));
    EXPECT_EQ(primes_up_to(10), (std::vector<std::uint64_t>{2, 3, 5, 7}));
    EXPECT_EQ(primes_up_to(20000), brute::primes(20000));
    EXPECT_EQ(primes_up_to(1000000).size(), 78498u);
    // Crosses several internal segments.
    EXPECT_EQ(primes_up_to(10000000).size(), 664579u);
}

TEST(Primes, Factorize) {
    using F = std::vector<std::pair<std::uint64_t, unsigned>>;
    EXPECT_EQ(factorize(1), F{});
    EXPECT_EQ(factorize(72), (F{{2, 3}, {3, 2}}));
    EXPECT_EQ(factorize(1000003ULL * 999983ULL), (F{{999983, 1}, {1000003, 1}}));
    for (std::uint64_t n = 2; n < 5000; ++n) {
        std::uint64_t prod = 1;
        for (auto [p, e] : factorize(n)) {
            EXPECT_TRUE(brute::is_prime(p));
            for (unsigned i = 0; i < e; ++i) prod *= p;
        }
        EXPECT_EQ(prod, n);
    }
}

TEST(Primes, SmallestPrimeFactorAndIsqrt) {
    EXPECT_EQ(smallest_prime_factor(35), 5u);
    EXPECT_EQ(smallest_prime_factor(49), 7u);
    EXPECT_EQ(smallest_prime_factor(97), 97u);
    EXPECT_EQ(isqrt(0), 0u);
    EXPECT_EQ(isqrt(99), 9u);
    EXPECT_EQ(isqrt(100), 10u);
    EXPECT_EQ(isqrt(UINT64_MAX), 4294967295u);
}
