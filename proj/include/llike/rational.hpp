// rational.hpp
// Exact rationals over signed 128-bit integers, and a reciprocal-style
// accumulator that stays exact while the denominators fit and falls back
// to compensated (Neumaier) double summation with a reported error bound.

#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace llike {

using i128 = __int128;
using u128 = unsigned __int128;

std::string to_string_i128(i128 v);

// Always stored reduced with a positive denominator.
class Rational {
public:
    Rational() = default;
    Rational(std::int64_t n) : num_(n), den_(1) {}
    // Reduces; throws Error(bad_params) when den == 0.
    Rational(i128 num, i128 den);

    i128 num() const { return num_; }
    i128 den() const { return den_; }

    long double to_long_double() const;
    double to_double() const { return static_cast<double>(to_long_double()); }
    std::string str() const;

    // nullopt when an intermediate does not fit in 128 bits.
    static std::optional<Rational> checked_add(const Rational& a, const Rational& b);
    static std::optional<Rational> checked_mul(const Rational& a, const Rational& b);

    // Throwing versions (Errc::overflow).
    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    // Compares by cross multiplication; throws on overflow.
    friend bool operator<(const Rational& a, const Rational& b);
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }

private:
    i128 num_ = 0;
    i128 den_ = 1;
};

// Sum of rational terms. exact() is available until the first overflow;
// value() is the exact value converted when available, otherwise the
// compensated floating sum.
class RationalSum {
public:
    void add(const Rational& term);
    void add_reciprocal(std::uint64_t n, std::int64_t numerator = 1);

    const std::optional<Rational>& exact() const { return exact_; }
    bool is_exact() const { return exact_.has_value(); }
    double value() const;
    // Bound on |value() - true sum|; zero while exact.
    double error_bound() const;
    std::uint64_t terms() const { return terms_; }

private:
    std::optional<Rational> exact_ = Rational(0);
    double sum_ = 0.0;
    double comp_ = 0.0;
    double abs_sum_ = 0.0;
    std::uint64_t terms_ = 0;
};

} // namespace llike
