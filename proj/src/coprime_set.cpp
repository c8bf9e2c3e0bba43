#include "llike/coprime_set.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <sstream>

#include "llike/error.hpp"
#include "llike/primes.hpp"

namespace llike {

std::string_view variant_name(Variant v) {
    return v == Variant::omega ? "omega" : "big-omega";
}

Variant parse_variant(std::string_view name) {
    if (name == "omega") return Variant::omega;
    if (name == "big-omega" || name == "big_omega" || name == "Omega") return Variant::big_omega;
    throw Error(Errc::bad_params, "unknown variant '" + std::string(name) + "'");
}

std::span<const std::uint64_t> CoprimeSet::generators_up_to(std::uint64_t limit) const {
    auto end = std::upper_bound(generators_.begin(), generators_.end(), limit);
    return {generators_.data(), static_cast<std::size_t>(end - generators_.begin())};
}

CoprimeSet CoprimeSet::with_variant(Variant v) const {
    CoprimeSet copy = *this;
    copy.variant_ = v;
    return copy;
}

namespace {

std::vector<std::uint64_t> distinct_prime_factors(std::uint64_t a) {
    if (is_prime(a)) return {a};
    std::vector<std::uint64_t> out;
    for (auto [p, e] : factorize(a)) out.push_back(p);
    return out;
}

// Throws NotCoprime for the first prime (ascending) dividing two entries.
void check_prime_exclusivity(std::span<const std::uint64_t> sorted) {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> owners;
    owners.reserve(sorted.size());
    for (std::uint64_t a : sorted)
        for (std::uint64_t q : distinct_prime_factors(a)) owners.emplace_back(q, a);
    std::sort(owners.begin(), owners.end());
    for (std::size_t i = 1; i < owners.size(); ++i)
        if (owners[i].first == owners[i - 1].first)
            throw not_coprime(owners[i - 1].second, owners[i].second);
}

std::string join(std::span<const std::uint64_t> v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(v[i]);
    }
    return s;
}

} // namespace

CoprimeSet validate(std::vector<std::uint64_t> generators, Variant variant, std::uint64_t bound,
                    std::string family) {
    if (generators.empty()) throw Error(Errc::empty_set, "generator list is empty");
    for (std::uint64_t a : generators) {
        if (a < 2) throw element_too_small(a);
        if (a > bound)
            throw Error(Errc::set_bound_exceeded,
                        std::to_string(a) + " > X_max=" + std::to_string(bound));
    }
    std::sort(generators.begin(), generators.end());
    check_prime_exclusivity(generators);
    return make_trusted_set(std::move(generators), variant, bound, std::move(family));
}

CoprimeSet make_trusted_set(std::vector<std::uint64_t> generators, Variant variant,
                            std::uint64_t bound, std::string family) {
    CoprimeSet s;
    s.generators_ = std::move(generators);
    s.variant_ = variant;
    s.family_ = std::move(family);
    s.bound_ = bound;
    return s;
}

bool sparse_primes_keeps(std::uint64_t index) {
    // floor(log2(log2 m)) == floor(log2(floor(log2 m))) since 2^k is an integer.
    const std::uint64_t m = index + 16;
    const auto log2m = static_cast<std::uint64_t>(std::bit_width(m) - 1);
    const auto k = static_cast<std::uint64_t>(std::bit_width(log2m) - 1);
    return index % k == 0;
}

CoprimeSet builtin_family(std::string_view name, const FamilyParams& params, std::uint64_t bound,
                          Variant variant) {
    if (name == "all-primes") {
        return make_trusted_set(primes_up_to(bound), variant, bound, "all-primes");
    }
    if (name == "sparse-primes") {
        std::vector<std::uint64_t> kept;
        auto primes = primes_up_to(bound);
        for (std::size_t i = 0; i < primes.size(); ++i)
            if (sparse_primes_keeps(i + 1)) kept.push_back(primes[i]);
        return make_trusted_set(std::move(kept), variant, bound, "sparse-primes");
    }
    if (name == "augmented-primes") {
        std::vector<std::uint64_t> inject = params.inject;
        std::sort(inject.begin(), inject.end());
        for (std::uint64_t c : inject) {
            if (c < 2) throw Error(Errc::bad_params, "injected element " + std::to_string(c) + " < 2");
            if (c > bound)
                throw Error(Errc::bad_params, "injected element " + std::to_string(c) +
                                                  " exceeds X_max=" + std::to_string(bound));
        }
        try {
            check_prime_exclusivity(inject);
        } catch (const Error& e) {
            throw Error(Errc::bad_params, std::string("injected elements: ") + e.what());
        }
        std::vector<std::uint64_t> removed;
        for (std::uint64_t c : inject)
            for (std::uint64_t q : distinct_prime_factors(c)) removed.push_back(q);
        std::sort(removed.begin(), removed.end());

        std::vector<std::uint64_t> gens;
        for (std::uint64_t p : primes_up_to(bound))
            if (!std::binary_search(removed.begin(), removed.end(), p)) gens.push_back(p);
        gens.insert(gens.end(), inject.begin(), inject.end());
        std::sort(gens.begin(), gens.end());
        return make_trusted_set(std::move(gens), variant, bound,
                                "augmented-primes(inject=" + join(inject) + ")");
    }
    throw Error(Errc::bad_params, "unknown family '" + std::string(name) + "'");
}

std::vector<std::uint64_t> read_set_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(Errc::io, "cannot open " + path);
    std::vector<std::uint64_t> out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ss(line);
        std::string tok;
        while (ss >> tok) {
            std::size_t used = 0;
            unsigned long long v = 0;
            try {
                if (tok.front() == '-') throw std::invalid_argument("negative");
                v = std::stoull(tok, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used != tok.size())
                throw Error(Errc::bad_params,
                            path + ":" + std::to_string(lineno) + ": bad integer '" + tok + "'");
            out.push_back(v);
        }
    }
    return out;
}

bool Decomposition::is_prime_generator(std::uint64_t p) const {
    return std::binary_search(primes.begin(), primes.end(), p);
}

std::uint64_t Decomposition::spf_of(std::uint64_t c) const {
    auto it = std::lower_bound(composites.begin(), composites.end(), c);
    if (it == composites.end() || *it != c)
        throw Error(Errc::bad_params, std::to_string(c) + " is not a composite generator");
    return spf[static_cast<std::size_t>(it - composites.begin())];
}

std::optional<std::uint64_t> Decomposition::generator_owning(std::uint64_t q) const {
    if (is_prime_generator(q)) return q;
    auto it = std::lower_bound(composite_prime_owner.begin(), composite_prime_owner.end(),
                               std::pair<std::uint64_t, std::uint64_t>{q, 0});
    if (it != composite_prime_owner.end() && it->first == q) return it->second;
    return std::nullopt;
}

Decomposition decompose(const CoprimeSet& set) {
    Decomposition d;
    for (std::uint64_t a : set.generators()) {
        if (is_prime(a)) {
            d.primes.push_back(a);
            d.recip_sum_P.add_reciprocal(a);
            continue;
        }
        const auto factors = factorize(a);
        const std::uint64_t p = factors.front().first;
        if (a % p != 0 || static_cast<u128>(p) * p > a)
            throw Error(Errc::invariant_violation, "spf(" + std::to_string(a) + ")");
        d.composites.push_back(a);
        d.spf.push_back(p);
        for (auto [q, e] : factors) d.composite_prime_owner.emplace_back(q, a);
        d.recip_sum_C.add_reciprocal(a);
    }
    std::sort(d.composite_prime_owner.begin(), d.composite_prime_owner.end());
    for (std::size_t i = 1; i < d.composite_prime_owner.size(); ++i)
        if (d.composite_prime_owner[i].first == d.composite_prime_owner[i - 1].first)
            throw Error(Errc::invariant_violation,
                        "prime " + std::to_string(d.composite_prime_owner[i].first) +
                            " divides two composites");
    std::vector<std::uint64_t> spf_sorted = d.spf;
    std::sort(spf_sorted.begin(), spf_sorted.end());
    if (std::adjacent_find(spf_sorted.begin(), spf_sorted.end()) != spf_sorted.end())
        throw Error(Errc::invariant_violation, "least prime factors of C are not distinct");
    return d;
}

std::uint64_t iota(std::uint64_t m, const Decomposition& dec) {
    if (m == 0) throw Error(Errc::not_in_semigroup, "0");
    std::uint64_t rest = m;
    std::uint64_t image = 1;
    for (std::size_t i = 0; i < dec.composites.size() && dec.composites[i] <= rest; ++i) {
        const std::uint64_t c = dec.composites[i];
        const std::uint64_t p2 = dec.spf[i] * dec.spf[i];
        while (rest % c == 0) {
            rest /= c;
            image *= p2;  // p_c^2 <= c keeps image <= m
        }
    }
    if (rest != 1) throw Error(Errc::not_in_semigroup, std::to_string(m));
    return image;
}

} // namespace llike
