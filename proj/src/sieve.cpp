#include "llike/sieve.hpp"

#include <algorithm>
#include <bit>
#include <istream>
#include <ostream>

#include "llike/error.hpp"
#include "llike/parallel.hpp"
#include "llike/primes.hpp"

namespace llike {

namespace {

std::uint64_t round_segment(std::uint64_t len) {
    len = std::max<std::uint64_t>(len, 64);
    return (len + 63) / 64 * 64;
}

std::uint64_t first_multiple(std::uint64_t q, std::uint64_t lo) {
    return (lo + q - 1) / q * q;
}

void check_range(const CoprimeSet& set, std::uint64_t lo, std::uint64_t hi) {
    if (lo < 1 || lo > hi)
        throw Error(Errc::bad_params,
                    "range [" + std::to_string(lo) + ", " + std::to_string(hi) + "] is empty");
    if (hi > set.bound())
        throw Error(Errc::set_bound_exceeded,
                    std::to_string(hi) + " > X_max=" + std::to_string(set.bound()));
}

void count_segment(std::span<const std::uint64_t> gens, std::uint64_t lo, std::uint64_t hi,
                   std::uint8_t* omega, std::uint8_t* big_omega) {
    for (std::uint64_t a : gens) {
        if (a > hi) break;
        for (std::uint64_t m = first_multiple(a, lo); m <= hi; m += a) ++omega[m - lo];
        for (std::uint64_t q = a;;) {
            for (std::uint64_t m = first_multiple(q, lo); m <= hi; m += q) ++big_omega[m - lo];
            if (q > hi / a) break;
            q *= a;
        }
    }
}

void n_c_segment(std::span<const std::uint64_t> composites, std::uint64_t lo, std::uint64_t hi,
                 std::uint64_t* n_c) {
    std::fill(n_c, n_c + (hi - lo + 1), std::uint64_t{1});
    for (std::uint64_t c : composites) {
        if (c > hi) break;
        for (std::uint64_t q = c;;) {
            for (std::uint64_t m = first_multiple(q, lo); m <= hi; m += q) n_c[m - lo] *= c;
            if (q > hi / c) break;
            q *= c;
        }
    }
}

} // namespace

void lambda_parity(std::span<const std::uint64_t> generators, Variant variant, std::uint64_t lo,
                   std::uint64_t hi, std::span<std::uint64_t> bits) {
    std::uint64_t* w = bits.data();
    const std::uint64_t span = hi - lo;
    auto flip_multiples = [&](std::uint64_t q) {
        for (std::uint64_t i = first_multiple(q, lo) - lo; i <= span; i += q)
            w[i >> 6] ^= std::uint64_t{1} << (i & 63);
    };
    for (std::uint64_t a : generators) {
        if (a > hi) break;
        if (variant == Variant::omega) {
            flip_multiples(a);
            continue;
        }
        for (std::uint64_t q = a;;) {
            flip_multiples(q);
            if (q > hi / a) break;
            q *= a;
        }
    }
}

std::uint64_t popcount_prefix(std::span<const std::uint64_t> words, std::uint64_t nbits) {
    std::uint64_t total = 0;
    const std::uint64_t full = nbits >> 6;
    for (std::uint64_t i = 0; i < full; ++i) total += std::popcount(words[i]);
    if (const unsigned rem = nbits & 63; rem != 0)
        total += std::popcount(words[full] & ((std::uint64_t{1} << rem) - 1));
    return total;
}

SieveTable sieve_range(const CoprimeSet& set, std::uint64_t lo, std::uint64_t hi,
                       const Decomposition* with_n_c, const SieveOptions& opts) {
    check_range(set, lo, hi);
    if (hi - lo + 1 > opts.max_table_len)
        throw Error(Errc::range_too_large, std::to_string(hi - lo + 1) + " > capacity " +
                                               std::to_string(opts.max_table_len));
    SieveTable t;
    t.lo = lo;
    t.hi = hi;
    t.variant = set.variant();
    const std::size_t len = t.size();
    t.omega.assign(len, 0);
    t.big_omega.assign(len, 0);
    t.lambda_bits.assign((len + 63) / 64, 0);
    if (with_n_c) t.n_c.assign(len, 1);

    const std::uint64_t seg = round_segment(opts.segment_len);
    const std::size_t nseg = (len + seg - 1) / seg;
    const auto gens = set.generators_up_to(hi);
    for_each_segment(nseg, opts.workers, [&](std::size_t k) {
        const std::uint64_t off = k * seg;
        const std::uint64_t s_lo = lo + off;
        const std::uint64_t s_hi = std::min(hi, s_lo + seg - 1);
        std::uint8_t* om = t.omega.data() + off;
        std::uint8_t* bom = t.big_omega.data() + off;
        count_segment(gens, s_lo, s_hi, om, bom);
        const std::uint8_t* parity_src = set.variant() == Variant::omega ? om : bom;
        std::uint64_t* words = t.lambda_bits.data() + off / 64;
        for (std::uint64_t i = 0; i <= s_hi - s_lo; ++i)
            if (parity_src[i] & 1) words[i >> 6] |= std::uint64_t{1} << (i & 63);
        if (with_n_c) n_c_segment(with_n_c->composites, s_lo, s_hi, t.n_c.data() + off);
    });
    return t;
}

std::vector<std::uint64_t> lambda_plane(const CoprimeSet& set, std::uint64_t hi,
                                        const SieveOptions& opts) {
    check_range(set, 1, hi);
    constexpr std::uint64_t kMaxPlaneBits = std::uint64_t{1} << 36;  // 8 GiB of bits
    if (hi > kMaxPlaneBits)
        throw Error(Errc::range_too_large, "lambda plane of " + std::to_string(hi) + " bits");
    std::vector<std::uint64_t> words((hi + 63) / 64, 0);
    const std::uint64_t seg = round_segment(opts.segment_len);
    const std::size_t nseg = (hi + seg - 1) / seg;
    const auto gens = set.generators_up_to(hi);
    for_each_segment(nseg, opts.workers, [&](std::size_t k) {
        const std::uint64_t s_lo = 1 + k * seg;
        const std::uint64_t s_hi = std::min(hi, s_lo + seg - 1);
        std::span<std::uint64_t> out(words.data() + k * seg / 64, (s_hi - s_lo + 64) / 64);
        lambda_parity(gens, set.variant(), s_lo, s_hi, out);
    });
    return words;
}

CPart extract_c_part(const Decomposition& dec, std::uint64_t n) {
    if (n == 0) throw Error(Errc::bad_params, "n must be >= 1");
    CPart p;
    p.cofactor = n;
    for (std::uint64_t c : dec.composites) {
        if (c > p.cofactor) break;
        if (p.cofactor % c != 0) continue;
        ++p.omega_c;
        do {
            p.cofactor /= c;
            p.n_c *= c;
            ++p.big_omega_c;
        } while (p.cofactor % c == 0);
    }
    for (std::uint64_t c : dec.composites) {
        if (c > p.cofactor) break;
        if (p.cofactor % c == 0)
            throw Error(Errc::invariant_violation,
                        std::to_string(c) + " divides the cofactor of " + std::to_string(n));
    }
    return p;
}

namespace {

int sign_of(unsigned count) { return (count & 1) ? -1 : 1; }

// omega_P, Omega_P of m: P consists of primes, so only m's prime factors matter.
Counts prime_part_counts(const Decomposition& dec, std::uint64_t m) {
    Counts c;
    for (auto [q, e] : factorize(m)) {
        if (!dec.is_prime_generator(q)) continue;
        ++c.omega;
        c.big_omega += e;
    }
    return c;
}

} // namespace

LambdaParts lambda_parts(const CoprimeSet& set, const Decomposition& dec, std::uint64_t n) {
    const CPart cp = extract_c_part(dec, n);
    const Counts pc = prime_part_counts(dec, cp.cofactor);
    const bool omega = set.variant() == Variant::omega;
    LambdaParts parts;
    parts.lambda_c = sign_of(omega ? cp.omega_c : cp.big_omega_c);
    parts.lambda_p = sign_of(omega ? pc.omega : pc.big_omega);
    // v_p(n) == v_p(cofactor) for p in P, so lambda_P(n) == lambda_P(cofactor).
    parts.lambda_p_tilde = cp.n_c == 1 ? parts.lambda_p : 0;
    return parts;
}

Counts counts_by_factorization(const Decomposition& dec, std::uint64_t n) {
    if (n == 0) throw Error(Errc::bad_params, "n must be >= 1");
    std::vector<std::uint64_t> candidates;
    for (auto [q, e] : factorize(n))
        if (auto a = dec.generator_owning(q)) candidates.push_back(*a);
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    Counts c;
    for (std::uint64_t a : candidates) {
        if (n % a != 0) continue;
        ++c.omega;
        for (std::uint64_t m = n; m % a == 0; m /= a) ++c.big_omega;
    }
    return c;
}

int lambda_by_factorization(const CoprimeSet& set, const Decomposition& dec, std::uint64_t n) {
    const Counts c = counts_by_factorization(dec, n);
    return sign_of(set.variant() == Variant::omega ? c.omega : c.big_omega);
}

ConvolutionCheck convolution_terms(const CoprimeSet& set, const Decomposition& dec,
                                   std::uint64_t n) {
    ConvolutionCheck r;
    r.direct = lambda_by_factorization(set, dec, n);

    const auto factors = factorize(n);
    // Composites dividing n, with v_c(n).
    std::vector<std::pair<std::uint64_t, unsigned>> cs;
    Counts pc;
    for (auto [q, e] : factors) {
        if (dec.is_prime_generator(q)) {
            ++pc.omega;
            pc.big_omega += e;
            continue;
        }
        auto owner = dec.generator_owning(q);
        if (!owner || n % *owner != 0) continue;
        if (std::any_of(cs.begin(), cs.end(), [&](const auto& p) { return p.first == *owner; }))
            continue;
        unsigned v = 0;
        for (std::uint64_t m = n; m % *owner == 0; m /= *owner) ++v;
        cs.emplace_back(*owner, v);
    }
    const bool omega = set.variant() == Variant::omega;
    const int lambda_p = sign_of(omega ? pc.omega : pc.big_omega);

    // Walk every exponent vector 0 <= nu_c <= v_c(n).
    std::vector<unsigned> nu(cs.size(), 0);
    for (;;) {
        std::uint64_t d = 1;
        unsigned om = 0, bom = 0;
        for (std::size_t i = 0; i < cs.size(); ++i) {
            for (unsigned j = 0; j < nu[i]; ++j) d *= cs[i].first;
            om += nu[i] > 0;
            bom += nu[i];
        }
        const std::uint64_t rest = n / d;
        const bool c_free = std::none_of(cs.begin(), cs.end(),
                                         [&](const auto& p) { return rest % p.first == 0; });
        const int term = c_free ? sign_of(omega ? om : bom) * lambda_p : 0;
        ++r.terms;
        if (term != 0) {
            ++r.nonzero_terms;
            r.nonzero_divisor = d;
        }
        r.sum += term;

        std::size_t i = 0;
        while (i < cs.size() && nu[i] == cs[i].second) nu[i++] = 0;
        if (i == cs.size()) break;
        ++nu[i];
    }
    return r;
}

bool verify_convolution(const CoprimeSet& set, const Decomposition& dec, std::uint64_t n) {
    return convolution_terms(set, dec, n).holds();
}

void write_table_csv(std::ostream& out, const SieveTable& t) {
    out << "n,omega,big_omega,lambda" << (t.has_n_c() ? ",n_C" : "") << '\n';
    for (std::uint64_t n = t.lo; n <= t.hi; ++n) {
        out << n << ',' << unsigned(t.omega_at(n)) << ',' << unsigned(t.big_omega_at(n)) << ','
            << t.lambda_at(n);
        if (t.has_n_c()) out << ',' << t.n_c_at(n);
        out << '\n';
    }
}

namespace {

template <class T>
void put_le(std::ostream& out, T v) {
    char buf[sizeof(T)];
    for (std::size_t i = 0; i < sizeof(T); ++i) buf[i] = static_cast<char>((v >> (8 * i)) & 0xff);
    out.write(buf, sizeof(T));
}

template <class T>
T get_le(std::istream& in) {
    unsigned char buf[sizeof(T)];
    if (!in.read(reinterpret_cast<char*>(buf), sizeof(T)))
        throw Error(Errc::io, "truncated table header");
    T v = 0;
    for (std::size_t i = 0; i < sizeof(T); ++i) v |= static_cast<T>(buf[i]) << (8 * i);
    return v;
}

} // namespace

void write_table_binary(std::ostream& out, const SieveTable& t) {
    out.write("LLSV", 4);
    put_le<std::uint32_t>(out, kTableFormatVersion);
    put_le<std::uint64_t>(out, t.lo);
    put_le<std::uint64_t>(out, t.hi);
    put_le<std::uint8_t>(out, static_cast<std::uint8_t>(t.variant));
    const std::size_t len = t.size();
    std::vector<char> bytes((len + 7) / 8, 0);
    for (std::size_t i = 0; i < bytes.size(); ++i)
        bytes[i] = static_cast<char>((t.lambda_bits[i / 8] >> (8 * (i % 8))) & 0xff);
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    out.write(reinterpret_cast<const char*>(t.omega.data()), static_cast<std::streamsize>(len));
    out.write(reinterpret_cast<const char*>(t.big_omega.data()),
              static_cast<std::streamsize>(len));
}

SieveTable read_table_binary(std::istream& in) {
    char magic[4];
    if (!in.read(magic, 4) || std::string(magic, 4) != "LLSV")
        throw Error(Errc::io, "bad magic, expected LLSV");
    const auto version = get_le<std::uint32_t>(in);
    if (version != kTableFormatVersion)
        throw Error(Errc::io, "unsupported table version " + std::to_string(version));
    SieveTable t;
    t.lo = get_le<std::uint64_t>(in);
    t.hi = get_le<std::uint64_t>(in);
    const auto v = get_le<std::uint8_t>(in);
    if (v > 1 || t.lo < 1 || t.hi < t.lo) throw Error(Errc::io, "corrupt table header");
    t.variant = static_cast<Variant>(v);
    const std::size_t len = t.size();
    std::vector<unsigned char> bytes((len + 7) / 8);
    t.omega.resize(len);
    t.big_omega.resize(len);
    if (!in.read(reinterpret_cast<char*>(bytes.data()), static_cast<std::streamsize>(bytes.size())) ||
        !in.read(reinterpret_cast<char*>(t.omega.data()), static_cast<std::streamsize>(len)) ||
        !in.read(reinterpret_cast<char*>(t.big_omega.data()), static_cast<std::streamsize>(len)))
        throw Error(Errc::io, "truncated table body");
    t.lambda_bits.assign((len + 63) / 64, 0);
    for (std::size_t i = 0; i < bytes.size(); ++i)
        t.lambda_bits[i / 8] |= static_cast<std::uint64_t>(bytes[i]) << (8 * (i % 8));
    return t;
}

} // namespace llike
