#include "llike/rational.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "llike/error.hpp"

namespace llike {

namespace {

i128 abs128(i128 v) { return v < 0 ? -v : v; }

i128 gcd128(i128 a, i128 b) {
    a = abs128(a);
    b = abs128(b);
    while (b != 0) {
        i128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

bool mul_ovf(i128 a, i128 b, i128& out) { return __builtin_mul_overflow(a, b, &out); }
bool add_ovf(i128 a, i128 b, i128& out) { return __builtin_add_overflow(a, b, &out); }

} // namespace

std::string to_string_i128(i128 v) {
    if (v == 0) return "0";
    bool neg = v < 0;
    u128 u = neg ? static_cast<u128>(-(v + 1)) + 1 : static_cast<u128>(v);
    std::string s;
    while (u != 0) {
        s.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
        u /= 10;
    }
    if (neg) s.push_back('-');
    std::reverse(s.begin(), s.end());
    return s;
}

Rational::Rational(i128 num, i128 den) {
    if (den == 0) throw Error(Errc::bad_params, "zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    i128 g = gcd128(num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    num_ = num;
    den_ = den;
}

long double Rational::to_long_double() const {
    return static_cast<long double>(num_) / static_cast<long double>(den_);
}

std::string Rational::str() const {
    if (den_ == 1) return to_string_i128(num_);
    return to_string_i128(num_) + "/" + to_string_i128(den_);
}

std::optional<Rational> Rational::checked_add(const Rational& a, const Rational& b) {
    i128 g = gcd128(a.den_, b.den_);
    i128 bd = b.den_ / g;
    i128 ad = a.den_ / g;
    i128 left, right, num, den;
    if (mul_ovf(a.num_, bd, left) || mul_ovf(b.num_, ad, right) || add_ovf(left, right, num) ||
        mul_ovf(a.den_, bd, den))
        return std::nullopt;
    return Rational(num, den);
}

std::optional<Rational> Rational::checked_mul(const Rational& a, const Rational& b) {
    i128 g1 = gcd128(a.num_, b.den_);
    i128 g2 = gcd128(b.num_, a.den_);
    if (g1 == 0) g1 = 1;
    if (g2 == 0) g2 = 1;
    i128 num, den;
    if (mul_ovf(a.num_ / g1, b.num_ / g2, num) || mul_ovf(a.den_ / g2, b.den_ / g1, den))
        return std::nullopt;
    return Rational(num, den);
}

Rational operator+(const Rational& a, const Rational& b) {
    auto r = Rational::checked_add(a, b);
    if (!r) throw Error(Errc::overflow, "rational addition " + a.str() + " + " + b.str());
    return *r;
}

Rational operator-(const Rational& a, const Rational& b) {
    return a + Rational(-b.num(), b.den());
}

Rational operator*(const Rational& a, const Rational& b) {
    auto r = Rational::checked_mul(a, b);
    if (!r) throw Error(Errc::overflow, "rational product " + a.str() + " * " + b.str());
    return *r;
}

bool operator<(const Rational& a, const Rational& b) {
    i128 l, r;
    if (mul_ovf(a.num_, b.den_, l) || mul_ovf(b.num_, a.den_, r))
        return a.to_long_double() < b.to_long_double();
    return l < r;
}

void RationalSum::add(const Rational& term) {
    ++terms_;
    if (exact_) exact_ = Rational::checked_add(*exact_, term);
    const double x = term.to_double();
    // Neumaier
    const double t = sum_ + x;
    if (std::fabs(sum_) >= std::fabs(x))
        comp_ += (sum_ - t) + x;
    else
        comp_ += (x - t) + sum_;
    sum_ = t;
    abs_sum_ += std::fabs(x);
}

void RationalSum::add_reciprocal(std::uint64_t n, std::int64_t numerator) {
    add(Rational(static_cast<i128>(numerator), static_cast<i128>(n)));
}

double RationalSum::value() const {
    if (exact_) return exact_->to_double();
    return sum_ + comp_;
}

double RationalSum::error_bound() const {
    if (exact_) return 0.0;
    constexpr double u = std::numeric_limits<double>::epsilon() / 2;
    const double n = static_cast<double>(terms_);
    // One rounding per converted term, 2u for the compensated sum itself.
    return (3.0 * u + n * u * u) * abs_sum_;
}

} // namespace llike
