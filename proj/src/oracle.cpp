#include "llike/oracle.hpp"

#include <algorithm>

#include "llike/primes.hpp"

namespace llike {

Counts trial_division_counts(std::span<const std::uint64_t> generators, std::uint64_t n) {
    Counts c;
    for (std::uint64_t a : generators) {
        if (a > n) break;
        if (n % a != 0) continue;
        ++c.omega;
        for (std::uint64_t m = n; m % a == 0; m /= a) ++c.big_omega;
    }
    return c;
}

CoprimeSet random_coprime_set(std::mt19937_64& rng, std::uint64_t bound, Variant variant) {
    const std::vector<std::uint64_t> primes = primes_up_to(bound);
    std::vector<std::uint64_t> pool;
    for (std::uint64_t p : primes)
        if (p <= 47) pool.push_back(p);

    std::vector<std::uint64_t> used, gens;
    auto pick_unused = [&]() -> std::uint64_t {
        for (int tries = 0; tries < 32; ++tries) {
            const std::uint64_t p = pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)];
            if (std::find(used.begin(), used.end(), p) == used.end()) return p;
        }
        return 0;
    };

    const int composites = std::uniform_int_distribution<int>(1, 4)(rng);
    for (int i = 0; i < composites && pool.size() >= 2; ++i) {
        for (int attempt = 0; attempt < 20; ++attempt) {
            const int shape = std::uniform_int_distribution<int>(0, 2)(rng);
            std::vector<std::uint64_t> factors;
            std::uint64_t value = 1;
            if (shape == 1) {  // prime power
                const std::uint64_t p = pick_unused();
                if (p == 0) continue;
                const int e = std::uniform_int_distribution<int>(2, 3)(rng);
                factors = {p};
                for (int j = 0; j < e; ++j) value *= p;
            } else {  // product of two or three distinct primes
                const int parts = shape == 0 ? 2 : 3;
                for (int j = 0; j < parts; ++j) {
                    const std::uint64_t p = pick_unused();
                    if (p == 0 || std::find(factors.begin(), factors.end(), p) != factors.end()) {
                        factors.clear();
                        break;
                    }
                    factors.push_back(p);
                    value *= p;
                }
                if (factors.empty()) continue;
            }
            if (value > bound) continue;
            used.insert(used.end(), factors.begin(), factors.end());
            gens.push_back(value);
            break;
        }
    }

    const double density = std::uniform_real_distribution<double>(0.2, 1.0)(rng);
    std::bernoulli_distribution keep(density);
    for (std::uint64_t p : primes) {
        if (std::find(used.begin(), used.end(), p) != used.end()) continue;
        if (keep(rng)) gens.push_back(p);
    }
    if (gens.empty()) gens.push_back(primes.empty() ? bound : primes.back());
    std::string name = "random(composites=";
    std::sort(gens.begin(), gens.end());
    bool first = true;
    for (std::uint64_t g : gens) {
        if (is_prime(g)) continue;
        name += (first ? "" : ",") + std::to_string(g);
        first = false;
    }
    name += ")";
    return validate(std::move(gens), variant, bound, name);
}

namespace {

void note(VerifySummary& s, const std::string& msg) {
    if (s.first_failures.size() < 10) s.first_failures.push_back(msg);
}

void verify_one(const CoprimeSet& set, std::uint64_t nmax, const SieveOptions& opts,
                VerifySummary& s) {
    const Decomposition dec = decompose(set);
    const SieveTable t = sieve_range(set, 1, nmax, &dec, opts);
    const bool omega = set.variant() == Variant::omega;
    const std::string tag = set.family() + "/" + std::string(variant_name(set.variant()));
    ++s.sets;
    for (std::uint64_t n = 1; n <= nmax; ++n) {
        ++s.integers;
        const Counts o = trial_division_counts(set.generators(), n);
        const int lambda = ((omega ? o.omega : o.big_omega) & 1) ? -1 : 1;
        if (t.omega_at(n) != o.omega || t.big_omega_at(n) != o.big_omega || t.lambda_at(n) != lambda) {
            ++s.oracle_mismatches;
            note(s, tag + ": sieve/oracle mismatch at n=" + std::to_string(n));
        }
        const CPart cp = extract_c_part(dec, n);
        if (t.n_c_at(n) != cp.n_c) {
            ++s.n_c_mismatches;
            note(s, tag + ": n_C mismatch at n=" + std::to_string(n));
        }
        const Counts pc = trial_division_counts(dec.primes, cp.cofactor);
        if (o.omega != cp.omega_c + pc.omega || o.big_omega != cp.big_omega_c + pc.big_omega) {
            ++s.additivity_failures;
            note(s, tag + ": C/P additivity fails at n=" + std::to_string(n));
        }
        const ConvolutionCheck cc = convolution_terms(set, dec, n);
        if (!cc.holds() || cc.direct != lambda || cc.nonzero_terms != 1 ||
            cc.nonzero_divisor != cp.n_c) {
            ++s.convolution_failures;
            note(s, tag + ": convolution identity fails at n=" + std::to_string(n));
        }
    }
}

} // namespace

VerifySummary run_verification(std::uint64_t seed, std::uint64_t nmax, unsigned nsets,
                               const SieveOptions& opts) {
    VerifySummary s;
    std::mt19937_64 rng(seed);
    for (unsigned i = 0; i < nsets; ++i) {
        const CoprimeSet set = random_coprime_set(rng, nmax, Variant::big_omega);
        verify_one(set, nmax, opts, s);
        verify_one(set.with_variant(Variant::omega), nmax, opts, s);
    }
    return s;
}

} // namespace llike
