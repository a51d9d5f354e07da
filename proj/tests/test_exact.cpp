#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "polyprism/error.hpp"
#include "polyprism/exact_kernel.hpp"
#include "polyprism/exact_matrix.hpp"
#include "polyprism/quad_surd.hpp"
#include "polyprism/rational.hpp"
#include "polyprism/spectral.hpp"

using namespace polyprism;

namespace {

Rational q(const char* text) { return Rational::parse(text); }

// Laplace expansion along the first row: the independent oracle for elimination.
BigInt cofactor_det(const IntMatrix& a) {
    const std::size_t n = a.order();
    if (n == 0) return 1;
    if (n == 1) return a(0, 0);
    BigInt total = 0;
    for (std::size_t col = 0; col < n; ++col) {
        IntMatrix minor(n - 1);
        for (std::size_t i = 1; i < n; ++i) {
            std::size_t c = 0;
            for (std::size_t j = 0; j < n; ++j) {
                if (j == col) continue;
                minor(i - 1, c++) = a(i, j);
            }
        }
        const BigInt term = a(0, col) * cofactor_det(minor);
        if (col % 2 == 0) total += term; else total -= term;
    }
    return total;
}

double float_det(std::vector<std::vector<double>> a) {
    const std::size_t n = a.size();
    double det = 1.0;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        for (std::size_t i = k + 1; i < n; ++i)
            if (std::abs(a[i][k]) > std::abs(a[pivot][k])) pivot = i;
        if (pivot != k) { std::swap(a[pivot], a[k]); det = -det; }
        det *= a[k][k];
        if (a[k][k] == 0.0) return 0.0;
        for (std::size_t i = k + 1; i < n; ++i) {
            const double f = a[i][k] / a[k][k];
            for (std::size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
        }
    }
    return det;
}

}  // namespace

TEST_CASE("rational arithmetic stays canonical") {
    const Rational a(BigInt(6), BigInt(-8));
    CHECK(a.to_string() == "-3/4");
    CHECK(a.denominator() == 4);
    CHECK(q("10/4") == Rational(BigInt(5), BigInt(2)));
    CHECK(q("7").is_integer());
    CHECK((q("1/3") + q("1/6")).to_string() == "1/2");
    CHECK((q("2/3") / q("4/9")).to_string() == "3/2");
    CHECK(q("-2/3").abs() == q("2/3"));
    CHECK(q("2/3").pow(-2) == q("9/4"));
    CHECK(q("1/3") < q("1/2"));
    CHECK(q("1/8").to_decimal(3) == "0.125");
    CHECK(q("2/3").to_decimal(3) == "0.667");
    CHECK(q("-1/3").to_decimal(2) == "-0.33");
    CHECK(q("5").to_decimal(2) == "5.00");
    CHECK_THROWS_AS(q("1/2").to_integer(), ConsistencyError);
    CHECK_THROWS_AS(q("1/0"), InvalidParameter);
    CHECK_THROWS_AS(q("abc"), InvalidParameter);
    CHECK_THROWS(q("1") / q("0"));
}

TEST_CASE("quadratic surd identities") {
    const QuadSurd x(Rational(2), Rational(1));
    CHECK(x * x.conjugate() == QuadSurd(Rational(1)));
    CHECK(x * x == QuadSurd(Rational(7), Rational(4)));
    CHECK(x.pow(0) == QuadSurd(Rational(1)));
    CHECK(x.pow(5) == x * x * x * x * x);
    CHECK(x.norm() == Rational(1));
    CHECK((QuadSurd(Rational(1)) / x) == x.conjugate());
    CHECK(QuadSurd::sqrt3() * QuadSurd::sqrt3() == QuadSurd(Rational(3)));
    CHECK(x.to_double() == doctest::Approx(2.0 + std::sqrt(3.0)));
    CHECK_THROWS_AS(x.to_rational("x"), ConsistencyError);
    CHECK(QuadSurd(q("5/7")).to_rational() == q("5/7"));
    CHECK_THROWS(x / QuadSurd());
}

TEST_CASE("conjugation is a field automorphism") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<long> coef(-40, 40);
    std::uniform_int_distribution<long> den(1, 12);
    auto draw = [&] {
        return QuadSurd(Rational(BigInt(coef(rng)), BigInt(den(rng))),
                        Rational(BigInt(coef(rng)), BigInt(den(rng))));
    };
    for (int trial = 0; trial < 200; ++trial) {
        const QuadSurd a = draw();
        const QuadSurd b = draw();
        CHECK((a + b).conjugate() == a.conjugate() + b.conjugate());
        CHECK((a * b).conjugate() == a.conjugate() * b.conjugate());
        CHECK((a * b).norm() == a.norm() * b.norm());
        if (!(b == QuadSurd())) CHECK((a / b) * b == a);
    }
}

TEST_CASE("bareiss determinant on small integer matrices") {
    IntMatrix two(2);
    two(0, 0) = 2; two(0, 1) = 1; two(1, 0) = 1; two(1, 1) = 2;
    CHECK(bareiss_det(two) == 3);
    CHECK(bareiss_det(IntMatrix()) == 1);

    IntMatrix swap(3);  // needs a row exchange on the first pivot
    swap(0, 1) = 1; swap(1, 0) = 1; swap(2, 2) = 5;
    CHECK(bareiss_det(swap) == -5);

    IntMatrix singular(3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) singular(i, j) = static_cast<long>(i + j);
    CHECK(bareiss_det(singular) == 0);
}

TEST_CASE("bareiss agrees with cofactor expansion on random matrices") {
    std::mt19937 rng(1234);
    std::uniform_int_distribution<long> entry(-9, 9);
    std::bernoulli_distribution sparse(0.3);
    for (std::size_t order = 1; order <= 5; ++order) {
        for (int trial = 0; trial < 60; ++trial) {
            IntMatrix a(order);
            for (std::size_t i = 0; i < order; ++i)
                for (std::size_t j = 0; j < order; ++j) a(i, j) = sparse(rng) ? 0 : entry(rng);
            CHECK(bareiss_det(a) == cofactor_det(a));
        }
    }
}

TEST_CASE("rational bareiss") {
    RatMatrix a(2);
    a(0, 0) = q("1/2"); a(0, 1) = q("1/3");
    a(1, 0) = q("1/4"); a(1, 1) = q("1/5");
    CHECK(bareiss_det(a) == q("1/10") - q("1/12"));
}

TEST_CASE("exact images keep every principal minor of the float matrices") {
    for (std::size_t n = 2; n <= 6; ++n) {
        const ReducedMatrices r = reduced_matrices(n);
        const RatMatrix em = exact_rung_symmetric(n);
        const RatMatrix en = exact_rung_antisymmetric(n);
        CHECK_FALSE(em.is_symmetric());
        const std::size_t size = n + 1;
        for (unsigned mask = 1; mask < (1u << size); ++mask) {
            std::vector<std::size_t> idx;
            for (std::size_t i = 0; i < size; ++i)
                if (mask & (1u << i)) idx.push_back(i);
            std::vector<std::vector<double>> fm(idx.size(), std::vector<double>(idx.size()));
            std::vector<std::vector<double>> fn = fm;
            for (std::size_t i = 0; i < idx.size(); ++i)
                for (std::size_t j = 0; j < idx.size(); ++j) {
                    fm[i][j] = r.rung_symmetric(idx[i], idx[j]);
                    fn[i][j] = r.rung_antisymmetric(idx[i], idx[j]);
                }
            CHECK(bareiss_det(em.principal_submatrix(idx)).to_double() ==
                  doctest::Approx(float_det(fm)).epsilon(1e-12).scale(1.0));
            CHECK(bareiss_det(en.principal_submatrix(idx)).to_double() ==
                  doctest::Approx(float_det(fn)).epsilon(1e-12).scale(1.0));
        }
    }
}

TEST_CASE("leading minors match their closed forms") {
    const auto m = symmetric_leading_minors(30);
    REQUIRE(m.size() == 30);
    CHECK(m[0].determinant == q("1/5"));
    CHECK(m[1].determinant == q("1/35"));
    CHECK(m[2].determinant == q("1/245"));
    for (const auto& pair : m) CHECK(pair.agree());

    const auto w = antisymmetric_leading_minors(30);
    REQUIRE(w.size() == 30);
    CHECK(w[0].determinant == q("3/5"));
    CHECK(w[1].determinant == q("11/35"));
    CHECK(w[2].determinant == q("41/245"));
    for (const auto& pair : w) CHECK(pair.agree());

    CHECK(antisymmetric_minor_closed_surd(0).to_rational() == q("7/5"));
    CHECK(symmetric_minor_closed(4) == q("1/1715"));
}

TEST_CASE("principal minor sums") {
    RatMatrix d(3);
    d(0, 0) = 1; d(1, 1) = 2; d(2, 2) = 3;
    CHECK(principal_minor_sum(d, 1) == Rational(6));
    CHECK(principal_minor_sum(d, 2) == Rational(11));
    CHECK(principal_minor_sum(d, 3) == Rational(6));
}

TEST_CASE("symmetric coefficients") {
    const auto c2 = symmetric_coefficients(2);
    CHECK(c2.lowest_closed == q("17/175"));
    CHECK(c2.second_closed == q("24/35"));
    CHECK(c2.oracle_enumerated);

    const auto c1 = symmetric_coefficients(1);
    CHECK(c1.lowest_oracle == q("2/5"));
    CHECK(c1.second_oracle == Rational(1));

    const auto c3 = symmetric_coefficients(3);
    CHECK(c3.lowest_oracle == q("24/1225"));
    CHECK(c3.second_oracle == q("334/1225"));

    for (std::size_t n = 2; n <= 14; ++n) {
        const auto c = symmetric_coefficients(n);
        CHECK(c.lowest_closed == c.lowest_oracle);
        CHECK(c.second_closed == c.second_oracle);
        CHECK(c.oracle_enumerated == (n <= kEnumerationLimit));
    }
}

TEST_CASE("antisymmetric determinant routes") {
    const auto d2 = antisymmetric_determinant(2);
    CHECK(d2.closed_form == q("6/35"));
    CHECK(d2.expansion == q("6/35"));
    CHECK(d2.determinant == q("6/35"));
    CHECK(antisymmetric_determinant(3).determinant == q("16/175"));
    CHECK(antisymmetric_determinant(4).determinant == q("418/8575"));

    const auto d1 = antisymmetric_determinant(1);
    CHECK(d1.determinant == q("58/175"));
    CHECK(d1.expansion == q("58/175"));
    CHECK(d1.closed_form == q("8/25"));
    CHECK(d1.expansion_extended == q("8/25"));

    for (std::size_t n = 2; n <= 12; ++n) {
        const auto d = antisymmetric_determinant(n);
        CHECK(d.closed_form == d.determinant);
        CHECK(d.expansion == d.determinant);
        CHECK(d.expansion_extended == d.determinant);
    }
}

TEST_CASE("antisymmetric coefficient sign variants") {
    const auto b2 = antisymmetric_coefficient(2);
    CHECK(b2.convolution_oracle == q("173/175"));
    CHECK(b2.minus_variant == q("173/175"));
    CHECK(b2.plus_variant == q("551/525"));
    CHECK_FALSE(b2.plus_matches());

    CHECK(antisymmetric_coefficient(1).convolution_oracle == q("6/5"));
    CHECK(antisymmetric_coefficient(3).convolution_oracle == q("872/1225"));

    for (std::size_t n = 1; n <= 12; ++n) {
        const auto b = antisymmetric_coefficient(n);
        CHECK(b.minus_matches());
        CHECK_FALSE(b.plus_matches());
        if (n <= kEnumerationLimit) {
            REQUIRE(b.enumerated_oracle.has_value());
            CHECK(*b.enumerated_oracle == b.convolution_oracle);
        } else {
            CHECK_FALSE(b.enumerated_oracle.has_value());
        }
    }
}
