#include "llike/primes.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "llike/rational.hpp"

namespace llike {

std::uint64_t isqrt(std::uint64_t n) {
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n)));
    while (r > 0 && static_cast<u128>(r) * r > n) --r;
    while (static_cast<u128>(r + 1) * (r + 1) <= n) ++r;
    return r;
}

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1;
    b %= m;
    while (e != 0) {
        if (e & 1) r = mulmod(r, b, m);
        b = mulmod(b, b, m);
        e >>= 1;
    }
    return r;
}

bool strong_probable_prime(std::uint64_t n, std::uint64_t base, std::uint64_t d, unsigned s) {
    base %= n;
    if (base == 0) return true;
    std::uint64_t x = powmod(base, d, n);
    if (x == 1 || x == n - 1) return true;
    for (unsigned i = 1; i < s; ++i) {
        x = mulmod(x, x, n);
        if (x == n - 1) return true;
    }
    return false;
}

constexpr std::array<std::uint64_t, 12> kSmallPrimes = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

} // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : kSmallPrimes) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    if (n < 37 * 37) return true;
    std::uint64_t d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // Smallest prefix of the prime bases that is deterministic below each bound.
    std::size_t bases = 12;
    if (n < 3'215'031'751ULL)
        bases = 4;
    else if (n < 3'474'749'660'383ULL)
        bases = 6;
    else if (n < 341'550'071'728'321ULL)
        bases = 7;
    for (std::size_t i = 0; i < bases; ++i)
        if (!strong_probable_prime(n, kSmallPrimes[i], d, s)) return false;
    return true;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    if (n < 2) return out;
    out.push_back(2);
    if (n < 3) return out;

    // Base primes up to sqrt(n), odd only.
    const std::uint64_t root = isqrt(n);
    std::vector<char> small(root + 1, 1);
    std::vector<std::uint64_t> base;
    for (std::uint64_t i = 3; i <= root; i += 2) {
        if (!small[i]) continue;
        base.push_back(i);
        for (std::uint64_t j = i * i; j <= root; j += 2 * i) small[j] = 0;
    }

    // Segment over odd numbers: index k <-> 2k+1.
    constexpr std::uint64_t kSeg = 1 << 18;
    std::vector<char> seg(kSeg);
    const std::uint64_t last = (n - 1) / 2;
    std::vector<std::uint64_t> next(base.size());
    for (std::size_t i = 0; i < base.size(); ++i) next[i] = (base[i] * base[i]) / 2;
    for (std::uint64_t lo = 1; lo <= last; lo += kSeg) {
        const std::uint64_t hi = std::min(last, lo + kSeg - 1);
        std::fill(seg.begin(), seg.end(), 1);
        for (std::size_t i = 0; i < base.size(); ++i) {
            std::uint64_t j = next[i];
            if (j > hi) continue;
            for (; j <= hi; j += base[i]) seg[j - lo] = 0;
            next[i] = j;
        }
        for (std::uint64_t k = lo; k <= hi; ++k)
            if (seg[k - lo]) out.push_back(2 * k + 1);
    }
    return out;
}

std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
    std::vector<std::pair<std::uint64_t, unsigned>> f;
    auto strip = [&](std::uint64_t p) {
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e != 0) f.emplace_back(p, e);
    };
    strip(2);
    strip(3);
    for (std::uint64_t p = 5; p * p <= n; p += 6) {
        strip(p);
        strip(p + 2);
    }
    if (n > 1) f.emplace_back(n, 1);
    return f;
}

std::uint64_t smallest_prime_factor(std::uint64_t n) {
    if (n < 2) return n;
    if (n % 2 == 0) return 2;
    if (n % 3 == 0) return 3;
    for (std::uint64_t p = 5; p * p <= n; p += 6) {
        if (n % p == 0) return p;
        if (n % (p + 2) == 0) return p + 2;
    }
    return n;
}

} // namespace llike
