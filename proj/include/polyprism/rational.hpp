#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace polyprism {

using BigInt = mpz_class;

std::string to_string(const BigInt& value);

/// Exact rational number, always canonical: gcd(num, den) = 1 and den > 0.
class Rational {
public:
    Rational() = default;
    Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
    Rational(const BigInt& value) : value_(value) {}  // NOLINT(google-explicit-constructor)
    Rational(const BigInt& num, const BigInt& den);

    /// Accepts "p", "-p" or "p/q".
    static Rational parse(const std::string& text);

    BigInt numerator() const { return value_.get_num(); }
    BigInt denominator() const { return value_.get_den(); }
    bool is_zero() const { return sgn(value_) == 0; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    /// Numerator when the value is an integer; throws ConsistencyError otherwise.
    BigInt to_integer() const;
    double to_double() const { return value_.get_d(); }

    /// "p/q", or "p" for integers.
    std::string to_string() const;
    /// Decimal expansion rounded half away from zero to `digits` fractional digits.
    std::string to_decimal(unsigned digits) const;

    Rational abs() const;
    Rational pow(long exponent) const;

    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    Rational operator-() const;

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    explicit Rational(mpq_class value) : value_(std::move(value)) {}
    mpq_class value_;
};

}  // namespace polyprism
