#include "polyprism/closed_forms.hpp"

#include "polyprism/error.hpp"
#include "polyprism/exact_kernel.hpp"

namespace polyprism {

namespace {

void require_positive(std::size_t n) {
    if (n == 0) throw InvalidParameter("closed forms need n >= 1");
}

Rational frac(long num, long den) { return Rational(BigInt(num), BigInt(den)); }

std::string at(std::size_t n) { return " at n=" + std::to_string(n); }

}  // namespace

QuadSurd power_plus(std::uint64_t k) { return QuadSurd(Rational(2), Rational(1)).pow(k); }
QuadSurd power_minus(std::uint64_t k) { return QuadSurd(Rational(2), Rational(-1)).pow(k); }

ClosedFormResult sum_inv_alpha(std::size_t n) {
    require_positive(n);
    const long nn = static_cast<long>(n);
    Rational value = Rational(49 * nn * nn * nn + 63 * nn * nn + 38 * nn) / Rational(6 * (7 * nn + 3));
    return {n, std::move(value), "sum-inv-alpha", n >= 2};
}

ClosedFormResult sum_inv_beta(std::size_t n) {
    require_positive(n);
    const long nn = static_cast<long>(n);
    const QuadSurd up = power_plus(n + 1);
    const QuadSurd down = power_minus(n + 1);
    const QuadSurd numerator = QuadSurd::sqrt3() * QuadSurd(Rational(7 * nn - 9)) * (up + down) -
                               QuadSurd(Rational(4)) * (power_plus(n) - power_minus(n));
    const QuadSurd value = numerator / (QuadSurd(Rational(6)) * (up - down)) + QuadSurd(frac(9, 2));
    return {n, value.to_rational("sum-inv-beta" + at(n)), "sum-inv-beta", n >= 2};
}

Rational sum_inv_beta_from_coefficients(std::size_t n) {
    require_positive(n);
    return antisymmetric_coefficient(n).minus_variant / antisymmetric_determinant(n).closed_form;
}

ClosedFormResult kfstar_via_reduced_spectra(std::size_t n) {
    require_positive(n);
    const long nn = static_cast<long>(n);
    const Rational bracket = Rational(4) * frac(5, 6) + Rational(2 * nn - 2) * frac(7, 8) +
                             frac(1, 2) * sum_inv_alpha(n).value + frac(1, 2) * sum_inv_beta(n).value;
    return {n, Rational(4 * (7 * nn + 3)) * bracket, "kfstar-reduced-spectra", n >= 2};
}

ClosedFormResult kfstar_closed(std::size_t n) {
    require_positive(n);
    const long nn = static_cast<long>(n);
    const QuadSurd up = power_plus(n + 1);
    const QuadSurd down = power_minus(n + 1);
    const QuadSurd numerator =
        QuadSurd::sqrt3() * QuadSurd(Rational((7 * nn - 9) * (7 * nn + 3))) * (up + down) -
        QuadSurd(Rational(4 * (7 * nn + 3))) * (power_plus(n) - power_minus(n));
    const QuadSurd fraction = numerator / (QuadSurd(Rational(3)) * (up - down));
    const Rational polynomial =
        frac(49, 3) * Rational(nn * nn * nn) + Rational(70 * nn * nn) + Rational(141 * nn) + Rational(46);
    return {n, fraction.to_rational("kfstar-closed" + at(n)) + polynomial, "kfstar-closed", n >= 2};
}

ClosedFormResult tau_closed(std::size_t n) {
    require_positive(n);
    BigInt power_of_two;
    mpz_ui_pow_ui(power_of_two.get_mpz_t(), 2, 8 * n - 3);
    const QuadSurd difference = power_plus(n + 1) - power_minus(n + 1);
    const QuadSurd product = QuadSurd::sqrt3() * QuadSurd(Rational(27) * Rational(power_of_two)) * difference;
    Rational value = product.to_rational("tau-closed" + at(n));
    if (!value.is_integer() || value.sign() <= 0) {
        throw ConsistencyError("tau-closed" + at(n) + " is not a positive integer: " + value.to_string());
    }
    return {n, std::move(value), "tau-closed", n >= 2};
}

ClosedFormResult gutman_closed(std::size_t n) {
    require_positive(n);
    const long nn = static_cast<long>(n);
    const Rational cube = Rational(nn) * Rational(nn) * Rational(nn);
    Rational value = frac(392, 3) * cube + Rational(364 * nn * nn) + frac(1102, 3) * Rational(nn) + Rational(38);
    if (!value.is_integer()) {
        throw ConsistencyError("gutman-closed" + at(n) + " is not an integer: " + value.to_string());
    }
    return {n, std::move(value), "gutman-closed", n >= 2};
}

Rational leading_coefficient_ratio() { return frac(49, 3) / frac(392, 3); }

std::vector<RatioPoint> ratio_series(std::size_t n_max) {
    if (n_max < 2) throw InvalidParameter("ratio series needs n_max >= 2");
    std::vector<RatioPoint> out;
    out.reserve(n_max - 1);
    for (std::size_t n = 2; n <= n_max; ++n) {
        out.push_back({n, kfstar_closed(n).value / gutman_closed(n).value});
    }
    return out;
}

}  // namespace polyprism
