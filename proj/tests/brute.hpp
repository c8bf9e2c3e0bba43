// brute.hpp
// Test-only reference implementations. Deliberately naive: nothing here
// touches the library's sieve, factorization or semigroup code.

#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

namespace brute {

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline std::vector<std::uint64_t> primes(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t p = 2; p <= n; ++p)
        if (is_prime(p)) out.push_back(p);
    return out;
}

// Classic Omega(n) by trial division.
inline unsigned big_omega(std::uint64_t n) {
    unsigned c = 0;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        while (n % d == 0) {
            n /= d;
            ++c;
        }
    return c + (n > 1);
}

inline int liouville(std::uint64_t n) { return (big_omega(n) & 1) ? -1 : 1; }

struct Counts {
    unsigned omega = 0, big_omega = 0;
};

// Every generator a <= n, a | n; nu with a^nu || n.
inline Counts counts(const std::vector<std::uint64_t>& gens, std::uint64_t n) {
    Counts c;
    for (std::uint64_t a : gens) {
        if (a > n || n % a != 0) continue;
        ++c.omega;
        std::uint64_t m = n;
        while (m % a == 0) {
            m /= a;
            ++c.big_omega;
        }
    }
    return c;
}

inline int lambda(const std::vector<std::uint64_t>& gens, std::uint64_t n, bool omega) {
    const Counts c = counts(gens, n);
    return ((omega ? c.omega : c.big_omega) & 1) ? -1 : 1;
}

// n in <C> iff dividing out every c leaves 1.
inline bool in_semigroup(const std::vector<std::uint64_t>& cs, std::uint64_t n) {
    for (std::uint64_t c : cs)
        while (n % c == 0) n /= c;
    return n == 1;
}

inline std::vector<std::uint64_t> semigroup(const std::vector<std::uint64_t>& cs, std::uint64_t x) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t n = 1; n <= x; ++n)
        if (in_semigroup(cs, n)) out.push_back(n);
    return out;
}

// Small exact fractions on long long; enough for hand-sized cases.
struct Frac {
    long long num = 0, den = 1;
    Frac() = default;
    Frac(long long n, long long d) : num(n), den(d) { norm(); }
    void norm() {
        long long g = std::gcd(num, den);
        if (g) {
            num /= g;
            den /= g;
        }
        if (den < 0) {
            num = -num;
            den = -den;
        }
    }
    Frac& operator+=(const Frac& o) {
        num = num * o.den + o.num * den;
        den *= o.den;
        norm();
        return *this;
    }
};

} // namespace brute
