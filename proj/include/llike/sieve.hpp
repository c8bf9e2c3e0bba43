// sieve.hpp
// Segmented computation of omega_A, Omega_A and lambda_A over integer
// ranges, the C-part n_C, and the per-integer split
//   lambda_A(n) = lambda_C(n_C) * lambda_P(n / n_C)
// together with its divisor-sum form over d | n, d in <C>.
//
// Marking scheme: generator a adds 1 to omega at every multiple of a; for
// Omega it adds 1 at every multiple of a, a^2, a^3, ... so that n with
// a^nu || n collects exactly nu. Counts never exceed log2(n) < 64, so the
// 8-bit planes cannot overflow.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "llike/coprime_set.hpp"

namespace llike {

struct SieveOptions {
    std::uint64_t segment_len = std::uint64_t{1} << 22;  // rounded up to a multiple of 64
    unsigned workers = 1;
    std::uint64_t max_table_len = std::uint64_t{1} << 26;  // SieveTable capacity
};

// Bit i of the lambda plane describes n = lo + i; a set bit means -1.
struct SieveTable {
    std::uint64_t lo = 1;
    std::uint64_t hi = 0;
    Variant variant = Variant::big_omega;
    std::vector<std::uint8_t> omega;
    std::vector<std::uint8_t> big_omega;
    std::vector<std::uint64_t> lambda_bits;
    std::vector<std::uint64_t> n_c;  // empty unless requested

    std::size_t size() const { return static_cast<std::size_t>(hi - lo + 1); }
    std::uint8_t omega_at(std::uint64_t n) const { return omega[n - lo]; }
    std::uint8_t big_omega_at(std::uint64_t n) const { return big_omega[n - lo]; }
    int lambda_at(std::uint64_t n) const {
        const std::uint64_t i = n - lo;
        return ((lambda_bits[i >> 6] >> (i & 63)) & 1) ? -1 : 1;
    }
    bool has_n_c() const { return !n_c.empty(); }
    std::uint64_t n_c_at(std::uint64_t n) const { return n_c[n - lo]; }
};

// Requires 1 <= lo <= hi <= set.bound() (SetBoundExceeded) and
// hi - lo + 1 <= opts.max_table_len (RangeTooLarge). Pass a decomposition
// to fill the n_C plane.
SieveTable sieve_range(const CoprimeSet& set, std::uint64_t lo, std::uint64_t hi,
                       const Decomposition* with_n_c = nullptr, const SieveOptions& opts = {});

// Parity kernel: XORs the lambda sign of every n in [lo, hi] into bits
// (bit n - lo). bits must hold at least hi - lo + 1 bits and be zeroed by
// the caller. Only generators <= hi are used.
void lambda_parity(std::span<const std::uint64_t> generators, Variant variant, std::uint64_t lo,
                   std::uint64_t hi, std::span<std::uint64_t> bits);

// Number of set bits among the first nbits of words.
std::uint64_t popcount_prefix(std::span<const std::uint64_t> words, std::uint64_t nbits);

// Lambda plane for n in [1, hi] (bit n - 1), sieved in parallel segments.
std::vector<std::uint64_t> lambda_plane(const CoprimeSet& set, std::uint64_t hi,
                                        const SieveOptions& opts = {});

// n = n_C * cofactor with n_C = prod_{c in C} c^{v_c(n)}.
struct CPart {
    std::uint64_t n_c = 1;
    std::uint64_t cofactor = 1;
    unsigned omega_c = 0;      // number of c with v_c(n) >= 1
    unsigned big_omega_c = 0;  // sum of v_c(n)
};

CPart extract_c_part(const Decomposition& dec, std::uint64_t n);

struct LambdaParts {
    int lambda_c = 1;        // lambda_C(n_C)
    int lambda_p = 1;        // lambda_P(n / n_C)
    int lambda_p_tilde = 1;  // lambda_P(n) if no c in C divides n, else 0
};

LambdaParts lambda_parts(const CoprimeSet& set, const Decomposition& dec, std::uint64_t n);

// omega_A(n), Omega_A(n) from the factorization of n: every generator
// dividing n owns one of n's prime factors.
struct Counts {
    unsigned omega = 0;
    unsigned big_omega = 0;
};
Counts counts_by_factorization(const Decomposition& dec, std::uint64_t n);
int lambda_by_factorization(const CoprimeSet& set, const Decomposition& dec, std::uint64_t n);

struct ConvolutionCheck {
    int direct = 0;  // lambda_A(n)
    int sum = 0;     // sum_{d | n, d in <C>} lambda_C(d) * lambda~_P(n / d)
    std::size_t terms = 0;
    std::size_t nonzero_terms = 0;
    std::uint64_t nonzero_divisor = 0;  // the d of the last nonzero term

    bool holds() const { return direct == sum; }
};

ConvolutionCheck convolution_terms(const CoprimeSet& set, const Decomposition& dec,
                                   std::uint64_t n);
bool verify_convolution(const CoprimeSet& set, const Decomposition& dec, std::uint64_t n);

// CSV: n,omega,big_omega,lambda[,n_C]
void write_table_csv(std::ostream& out, const SieveTable& t);

// Little-endian: "LLSV", u32 version, u64 lo, u64 hi, u8 variant, then the
// lambda plane as ceil(len/8) bytes (bit i of byte j is n = lo + 8j + i),
// then the omega and big_omega planes, one byte per n.
void write_table_binary(std::ostream& out, const SieveTable& t);
SieveTable read_table_binary(std::istream& in);

constexpr std::uint32_t kTableFormatVersion = 1;

} // namespace llike
