#include "llike/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "llike/error.hpp"
#include "llike/estimators.hpp"

namespace llike {

RationalSum prime_reciprocal_sum(std::span<const std::uint64_t> primes, std::uint64_t x) {
    RationalSum s;
    for (std::uint64_t p : primes) {
        if (p > x) break;
        s.add_reciprocal(p);
    }
    return s;
}

RationalSum distance_sum(std::span<const std::uint64_t> primes, std::uint64_t y, std::uint64_t x) {
    if (y < 1 || y > x) throw Error(Errc::bad_params, "distance sum needs 1 <= y <= x");
    RationalSum s;
    auto it = std::upper_bound(primes.begin(), primes.end(), y);
    for (; it != primes.end() && *it <= x; ++it) s.add_reciprocal(*it, 2);
    return s;
}

BoundReport hall_tenenbaum_bound(const CoprimeSet& set, const Decomposition& dec, std::uint64_t x,
                                 double K, const SieveOptions& opts) {
    if (!(K > 0.0) || !std::isfinite(K)) throw Error(Errc::bad_params, "K must be positive");
    if (x < 1) throw Error(Errc::bad_params, "x must be >= 1");
    if (x > set.bound())
        throw Error(Errc::set_bound_exceeded,
                    std::to_string(x) + " > X_max=" + std::to_string(set.bound()));
    BoundReport r;
    r.x = x;
    r.K = K;
    r.recip_sum = prime_reciprocal_sum(dec.primes, x);
    r.ht_bound = static_cast<double>(x) * std::exp(-2.0 * K * r.recip_sum.value());

    if (dec.primes.empty()) {
        r.empirical_sum = static_cast<std::int64_t>(x);  // lambda_P == 1
    } else {
        const CoprimeSet prime_part =
            make_trusted_set(dec.primes, set.variant(), set.bound(), set.family() + "|P");
        r.empirical_sum = mean(prime_part, x, opts).count;
    }
    r.empirical = static_cast<std::uint64_t>(std::llabs(r.empirical_sum));
    r.ratio = static_cast<double>(r.empirical) / r.ht_bound;
    return r;
}

} // namespace llike
