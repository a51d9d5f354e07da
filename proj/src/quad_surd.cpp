#include "polyprism/quad_surd.hpp"

#include <cmath>

#include "polyprism/error.hpp"

namespace polyprism {

Rational QuadSurd::to_rational(const std::string& context) const {
    if (!is_rational()) {
        throw ConsistencyError(context + " has nonzero sqrt(3) part: " + to_string());
    }
    return p_;
}

QuadSurd QuadSurd::pow(std::uint64_t exponent) const {
    QuadSurd base = *this;
    QuadSurd result(Rational(1));
    while (exponent > 0) {
        if (exponent & 1U) result *= base;
        exponent >>= 1;
        if (exponent > 0) base *= base;
    }
    return result;
}

double QuadSurd::to_double() const { return p_.to_double() + q_.to_double() * std::sqrt(3.0); }

std::string QuadSurd::to_string() const {
    if (q_.is_zero()) return p_.to_string();
    std::string out = p_.is_zero() ? "" : p_.to_string() + (q_.sign() < 0 ? " - " : " + ");
    const Rational shown = p_.is_zero() ? q_ : q_.abs();
    return out + "(" + shown.to_string() + ")*sqrt(3)";
}

QuadSurd& QuadSurd::operator+=(const QuadSurd& o) {
    p_ += o.p_;
    q_ += o.q_;
    return *this;
}

QuadSurd& QuadSurd::operator-=(const QuadSurd& o) {
    p_ -= o.p_;
    q_ -= o.q_;
    return *this;
}

QuadSurd& QuadSurd::operator*=(const QuadSurd& o) {
    Rational p = p_ * o.p_ + Rational(3) * q_ * o.q_;
    Rational q = p_ * o.q_ + q_ * o.p_;
    p_ = std::move(p);
    q_ = std::move(q);
    return *this;
}

QuadSurd& QuadSurd::operator/=(const QuadSurd& o) {
    const Rational n = o.norm();
    if (n.is_zero()) throw InvalidParameter("division by zero in Q(sqrt 3)");
    *this *= o.conjugate();
    p_ /= n;
    q_ /= n;
    return *this;
}

}  // namespace polyprism
