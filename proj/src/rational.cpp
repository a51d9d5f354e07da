#include "polyprism/rational.hpp"

#include "polyprism/error.hpp"

namespace polyprism {

std::string to_string(const BigInt& value) { return value.get_str(); }

Rational::Rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw InvalidParameter("rational with zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational Rational::parse(const std::string& text) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(BigInt(text));
        return Rational(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
    } catch (const std::invalid_argument&) {
        throw InvalidParameter("cannot parse rational '" + text + "'");
    }
}

BigInt Rational::to_integer() const {
    if (!is_integer()) throw ConsistencyError("expected an integer, got " + to_string());
    return numerator();
}

std::string Rational::to_string() const {
    if (is_integer()) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::string Rational::to_decimal(unsigned digits) const {
    BigInt scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
    const BigInt num = BigInt(::abs(value_.get_num())) * scale;
    const BigInt den = value_.get_den();
    BigInt q = num / den;
    const BigInt r = num - q * den;
    if (2 * r >= den) q += 1;

    std::string body = q.get_str();
    if (digits > 0) {
        if (body.size() <= digits) body.insert(0, digits + 1 - body.size(), '0');
        body.insert(body.size() - digits, ".");
    }
    if (sign() < 0 && q != 0) body.insert(0, "-");
    return body;
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(value_))); }

Rational Rational::pow(long exponent) const {
    if (exponent < 0) return Rational(1) / pow(-exponent);
    mpq_class base = value_;
    mpq_class result = 1;
    auto e = static_cast<unsigned long>(exponent);
    while (e > 0) {
        if (e & 1UL) result *= base;
        base *= base;
        e >>= 1;
    }
    return Rational(std::move(result));
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw InvalidParameter("division by zero rational");
    value_ /= o.value_;
    return *this;
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

}  // namespace polyprism
