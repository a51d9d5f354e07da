#pragma once

#include <cstdint>
#include <string>

#include "polyprism/rational.hpp"

namespace polyprism {

/// Exact element p + q*sqrt(3) of the field Q(sqrt 3).
class QuadSurd {
public:
    QuadSurd() = default;
    QuadSurd(Rational rational_part, Rational surd_part = Rational(0))  // NOLINT
        : p_(std::move(rational_part)), q_(std::move(surd_part)) {}

    static QuadSurd sqrt3() { return QuadSurd(Rational(0), Rational(1)); }

    const Rational& rational_part() const noexcept { return p_; }
    const Rational& surd_part() const noexcept { return q_; }

    bool is_rational() const { return q_.is_zero(); }
    /// Throws ConsistencyError naming `context` if the sqrt(3) part is nonzero.
    Rational to_rational(const std::string& context = "value") const;

    QuadSurd conjugate() const { return QuadSurd(p_, -q_); }
    /// p^2 - 3 q^2; zero only for zero.
    Rational norm() const { return p_ * p_ - Rational(3) * q_ * q_; }

    /// Exponentiation by squaring.
    QuadSurd pow(std::uint64_t exponent) const;

    double to_double() const;
    std::string to_string() const;

    QuadSurd& operator+=(const QuadSurd& o);
    QuadSurd& operator-=(const QuadSurd& o);
    QuadSurd& operator*=(const QuadSurd& o);
    /// Multiplies by the conjugate over the norm; throws on division by zero.
    QuadSurd& operator/=(const QuadSurd& o);

    friend QuadSurd operator+(QuadSurd a, const QuadSurd& b) { return a += b; }
    friend QuadSurd operator-(QuadSurd a, const QuadSurd& b) { return a -= b; }
    friend QuadSurd operator*(QuadSurd a, const QuadSurd& b) { return a *= b; }
    friend QuadSurd operator/(QuadSurd a, const QuadSurd& b) { return a /= b; }
    QuadSurd operator-() const { return QuadSurd(-p_, -q_); }

    friend bool operator==(const QuadSurd& a, const QuadSurd& b) = default;

private:
    Rational p_;
    Rational q_;
};

}  // namespace polyprism
