#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "polyprism/closed_forms.hpp"
#include "polyprism/exact_kernel.hpp"
#include "polyprism/graph.hpp"
#include "polyprism/invariants.hpp"
#include "polyprism/spectral.hpp"

using namespace polyprism;

namespace {

Rational q(const char* text) { return Rational::parse(text); }

double reciprocal_sum(const Spectrum& s, bool skip_zero) {
    double total = 0.0;
    for (std::size_t i = skip_zero ? 1 : 0; i < s.size(); ++i) total += 1.0 / s[i];
    return total;
}

}  // namespace

TEST_CASE("powers of 2 +- sqrt3") {
    CHECK(power_plus(1) == QuadSurd(Rational(2), Rational(1)));
    CHECK(power_minus(2) == QuadSurd(Rational(7), Rational(-4)));
    CHECK(power_plus(0) == QuadSurd(Rational(1)));
    CHECK((power_plus(40) * power_minus(40)) == QuadSurd(Rational(1)));
}

TEST_CASE("reciprocal sums of the reduced spectra") {
    CHECK(sum_inv_alpha(1).value == q("5/2"));
    CHECK(sum_inv_alpha(2).value == q("120/17"));
    CHECK(sum_inv_alpha(3).value == q("167/12"));
    CHECK_FALSE(sum_inv_alpha(1).pattern_regime);
    CHECK(sum_inv_alpha(2).pattern_regime);

    CHECK(sum_inv_beta(2).value == q("173/30"));
    CHECK(sum_inv_beta(3).value == q("109/14"));
    CHECK(sum_inv_beta(1).value == q("15/4"));
    CHECK(sum_inv_beta_from_coefficients(1) == q("15/4"));
    CHECK(antisymmetric_coefficient(1).convolution_oracle / antisymmetric_determinant(1).determinant == q("105/29"));

    for (std::size_t n = 2; n <= 12; ++n) {
        CHECK(sum_inv_beta(n).value == sum_inv_beta_from_coefficients(n));
        const ReducedMatrices r = reduced_matrices(n);
        CHECK(sum_inv_alpha(n).value.to_double() ==
              doctest::Approx(reciprocal_sum(sym_eigenvalues(r.rung_symmetric), true)).epsilon(1e-10));
        CHECK(sum_inv_beta(n).value.to_double() ==
              doctest::Approx(reciprocal_sum(sym_eigenvalues(r.rung_antisymmetric), false)).epsilon(1e-10));
    }
}

TEST_CASE("degree-Kirchhoff closed form") {
    CHECK(kfstar_closed(1).value == q("775/3"));
    CHECK(kfstar_closed(2).value == q("11726/15"));
    CHECK(kfstar_closed(3).value == q("11884/7"));
    CHECK(kfstar_via_reduced_spectra(2).value == q("11726/15"));
    for (std::size_t n = 2; n <= 12; ++n) {
        CHECK(kfstar_closed(n).value == kfstar_via_reduced_spectra(n).value);
        const auto numeric = degree_kirchhoff_index(strong_prism_polyomino(n));
        CHECK(numeric.resistance_route ==
              doctest::Approx(kfstar_closed(n).value.to_double()).epsilon(1e-9));
        CHECK(numeric.spectral_route ==
              doctest::Approx(kfstar_closed(n).value.to_double()).epsilon(1e-9));
    }
}

TEST_CASE("spanning-tree closed form") {
    CHECK(tau_closed(1).value == Rational(20736));
    CHECK(tau_closed(2).value == Rational(19906560));
    CHECK(tau_closed(3).value.to_integer() == BigInt("19025362944"));
    for (std::size_t n = 2; n <= 6; ++n)
        CHECK(tau_closed(n).value.to_integer() == spanning_trees(strong_prism_polyomino(n)).exact);
}

TEST_CASE("Gutman closed form against brute force") {
    CHECK(gutman_closed(1).value == Rational(900));
    CHECK(gutman_closed(2).value == Rational(3274));
    CHECK(gutman_closed(3).value == Rational(7944));
    for (std::size_t n = 1; n <= 20; ++n)
        CHECK(gutman_closed(n).value.to_integer() == gutman(strong_prism_polyomino(n)));
}

TEST_CASE("ratio of degree-Kirchhoff to Gutman") {
    CHECK(leading_coefficient_ratio() == q("1/8"));
    CHECK_THROWS(ratio_series(1));

    const auto series = ratio_series(1000);
    REQUIRE(series.size() == 999);
    CHECK(series.front().n == 2);
    CHECK(series.front().ratio == q("11726/15") / Rational(3274));
    for (const auto& point : series) {
        if (point.n >= 8) CHECK((point.ratio - q("1/8")).abs() < Rational(BigInt(1), BigInt(point.n)));
    }
    CHECK((series.back().ratio - q("1/8")).abs() < q("1/1000"));

    std::size_t increases = 0;
    for (std::size_t i = 1; i < series.size(); ++i)
        if (series[i].ratio > series[i - 1].ratio) ++increases;
    MESSAGE("ratio increases between consecutive n: " << increases << " of " << series.size() - 1);
}
