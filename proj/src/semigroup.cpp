#include "llike/semigroup.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "llike/coprime_set.hpp"
#include "llike/error.hpp"
#include "llike/primes.hpp"

namespace llike {

namespace {

std::vector<std::uint64_t> checked_composites(std::span<const std::uint64_t> composites) {
    std::vector<std::uint64_t> c(composites.begin(), composites.end());
    std::sort(c.begin(), c.end());
    for (std::uint64_t v : c)
        if (v < 4 || is_prime(v))
            throw Error(Errc::bad_params, std::to_string(v) + " is not composite");
    if (!c.empty()) validate(c, Variant::big_omega, c.back(), "composites");
    return c;
}

struct Dfs {
    const std::vector<std::uint64_t>& gens;
    std::uint64_t x;
    std::vector<std::pair<std::uint64_t, ExponentVector>> out;
    ExponentVector stack;

    void run(std::size_t from, std::uint64_t prod) {
        out.emplace_back(prod, stack);
        for (std::size_t j = from; j < gens.size(); ++j) {
            const std::uint64_t c = gens[j];
            if (c > x / prod) break;  // ascending: nothing later fits either
            std::uint64_t p = prod;
            for (std::uint32_t e = 1;; ++e) {
                if (__builtin_mul_overflow(p, c, &p))
                    throw Error(Errc::overflow, "semigroup product above 2^64");
                if (p > x) break;
                stack.emplace_back(static_cast<std::uint32_t>(j), e);
                run(j + 1, p);
                stack.pop_back();
            }
        }
    }
};

} // namespace

SemigroupEnumeration enumerate(std::span<const std::uint64_t> composites, std::uint64_t x) {
    if (x < 1) throw Error(Errc::bad_params, "x must be >= 1");
    SemigroupEnumeration e;
    e.bound = x;
    e.generators = checked_composites(composites);

    Dfs dfs{e.generators, x, {}, {}};
    dfs.run(0, 1);
    std::sort(dfs.out.begin(), dfs.out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    e.elements.reserve(dfs.out.size());
    e.exponents.reserve(dfs.out.size());
    for (auto& [n, ev] : dfs.out) {
        e.elements.push_back(n);
        e.exponents.push_back(std::move(ev));
    }
    if (e.count() > isqrt(x))
        throw Error(Errc::invariant_violation, "|<C>_x| = " + std::to_string(e.count()) +
                                                   " exceeds floor(sqrt(" + std::to_string(x) +
                                                   "))");
    return e;
}

SemigroupEnumeration squarefree_part(const SemigroupEnumeration& e) {
    SemigroupEnumeration out;
    out.bound = e.bound;
    out.generators = e.generators;
    for (std::size_t i = 0; i < e.count(); ++i) {
        const auto& ev = e.exponents[i];
        if (std::all_of(ev.begin(), ev.end(), [](const auto& p) { return p.second == 1; })) {
            out.elements.push_back(e.elements[i]);
            out.exponents.push_back(ev);
        }
    }
    return out;
}

ReciprocalMass reciprocal_mass(const SemigroupEnumeration& e) {
    ReciprocalMass r;
    for (std::uint64_t n : e.elements) r.mass.add_reciprocal(n);
    std::optional<Rational> prod = Rational(1);
    for (std::uint64_t c : e.generators) {
        const Rational factor(static_cast<i128>(c), static_cast<i128>(c - 1));
        if (prod) prod = Rational::checked_mul(*prod, factor);
        r.product_bound *= static_cast<long double>(c) / static_cast<long double>(c - 1);
    }
    r.product_bound_exact = prod;
    if (prod) r.product_bound = prod->to_long_double();
    return r;
}

namespace {

u128 gcd_u128(u128 a, u128 b) {
    while (b != 0) {
        u128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

// sum_{nu >= 1} (nu + 1)^l / c^nu
long double power_series_tail(std::uint64_t c, unsigned l) {
    const long double r = 1.0L / static_cast<long double>(c);
    long double sum = 0.0L, rp = 1.0L;
    for (unsigned nu = 1; nu < 4096; ++nu) {
        rp *= r;
        const long double term = std::pow(static_cast<long double>(nu + 1), l) * rp;
        sum += term;
        if (term < 1e-21L * sum) break;
    }
    return sum;
}

} // namespace

LcmMoment lcm_moment(std::span<const std::uint64_t> composites, unsigned l, std::uint64_t x) {
    if (l == 0) throw Error(Errc::bad_params, "arity must be >= 1");
    if (l > 4) throw Error(Errc::arity_too_large, std::to_string(l) + " > 4");
    const SemigroupEnumeration e = enumerate(composites, x);

    // Distinct partial lcms with multiplicities; lcm of coprime-generated
    // elements stays inside <C>, so the state space is small in practice.
    std::map<u128, u128> states{{1, 1}};
    for (unsigned step = 0; step < l; ++step) {
        std::map<u128, u128> next;
        for (const auto& [lcm, mult] : states) {
            for (std::uint64_t n : e.elements) {
                const u128 g = gcd_u128(lcm, n);
                u128 v;
                if (__builtin_mul_overflow(lcm / g, static_cast<u128>(n), &v))
                    throw Error(Errc::overflow, "lcm above 2^128");
                next[v] += mult;
            }
        }
        states = std::move(next);
    }

    LcmMoment m;
    constexpr u128 kI128Max = (~static_cast<u128>(0)) >> 1;
    for (const auto& [lcm, mult] : states) {
        if (lcm > kI128Max || mult > kI128Max) throw Error(Errc::overflow, "lcm above 2^127");
        m.sum.add(Rational(static_cast<i128>(mult), static_cast<i128>(lcm)));
        m.tuples += mult;
    }
    for (std::uint64_t c : e.generators)
        if (c <= x) m.product_bound *= 1.0L + power_series_tail(c, l);
    return m;
}

TailMass tail_mass(const SemigroupEnumeration& e, std::uint64_t threshold) {
    if (threshold < 1 || threshold > e.bound)
        throw Error(Errc::bad_params, "threshold T must satisfy 1 <= T <= x");
    TailMass t;
    t.threshold = threshold;
    for (std::uint64_t n : e.elements) {
        t.mass.add_reciprocal(n);
        if (n > threshold) {
            t.tail.add_reciprocal(n);
            ++t.tail_count;
        }
    }
    const double T = static_cast<double>(threshold);
    t.comparison = t.mass.value() / std::sqrt(T);
    t.count_bound = static_cast<double>(e.count()) / T;
    return t;
}

} // namespace llike
