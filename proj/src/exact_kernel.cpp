#include "polyprism/exact_kernel.hpp"

#include <map>

#include "polyprism/error.hpp"

namespace polyprism {

namespace {

const Rational kEndCouplingSquared(BigInt(1), BigInt(35));
const Rational kInnerCouplingSquared(BigInt(1), BigInt(49));

RatMatrix tridiagonal_image(std::size_t n, const Rational& end_diagonal, const Rational& inner_diagonal) {
    if (n == 0) throw InvalidParameter("reduced matrices need n >= 1");
    const std::size_t order = n + 1;
    RatMatrix m(order);
    for (std::size_t i = 0; i < order; ++i) {
        const bool end = (i == 0 || i + 1 == order);
        m(i, i) = end ? end_diagonal : inner_diagonal;
    }
    for (std::size_t i = 0; i + 1 < order; ++i) {
        const bool end = (i == 0 || i + 2 == order);
        m(i, i + 1) = Rational(-1);
        m(i + 1, i) = -(end ? kEndCouplingSquared : kInnerCouplingSquared);
    }
    return m;
}

QuadSurd root_plus() { return QuadSurd(Rational(BigInt(2), BigInt(7)), Rational(BigInt(1), BigInt(7))); }
QuadSurd root_minus() { return root_plus().conjugate(); }

// Tridiagonal block of `order` inner rows: diagonal 2/7, couplings 1/7.
Rational inner_block_determinant(std::size_t order) {
    if (order == 0) return Rational(1);
    RatMatrix p(order);
    for (std::size_t i = 0; i < order; ++i) p(i, i) = Rational(BigInt(2), BigInt(7));
    for (std::size_t i = 0; i + 1 < order; ++i) {
        p(i, i + 1) = Rational(-1);
        p(i + 1, i) = -kInnerCouplingSquared;
    }
    return bareiss_det(p);
}

std::vector<Rational> leading_minor_values(const RatMatrix& a, std::size_t i_max) {
    std::vector<Rational> values;
    values.reserve(i_max + 1);
    values.emplace_back(1);
    for (std::size_t i = 1; i <= i_max; ++i) values.push_back(bareiss_det(a.leading(i)));
    return values;
}

void subset_minor_sum(const RatMatrix& a, std::size_t minor_order, std::size_t start,
                      std::vector<std::size_t>& chosen, Rational& total) {
    if (chosen.size() == minor_order) {
        total += bareiss_det(a.principal_submatrix(chosen));
        return;
    }
    const std::size_t remaining = minor_order - chosen.size();
    for (std::size_t i = start; i + remaining <= a.order(); ++i) {
        chosen.push_back(i);
        subset_minor_sum(a, minor_order, i + 1, chosen, total);
        chosen.pop_back();
    }
}

}  // namespace

RatMatrix exact_rung_symmetric(std::size_t n) {
    return tridiagonal_image(n, Rational(BigInt(1), BigInt(5)), Rational(BigInt(2), BigInt(7)));
}

RatMatrix exact_rung_antisymmetric(std::size_t n) {
    return tridiagonal_image(n, Rational(BigInt(3), BigInt(5)), Rational(BigInt(4), BigInt(7)));
}

Rational symmetric_minor_closed(std::size_t i) {
    return Rational(BigInt(1), BigInt(5)) * Rational(BigInt(1), BigInt(7)).pow(static_cast<long>(i) - 1);
}

QuadSurd antisymmetric_minor_closed_surd(std::size_t i) {
    const QuadSurd z1(Rational(BigInt(21), BigInt(30)), Rational(BigInt(7), BigInt(30)));
    return z1 * root_plus().pow(i) + z1.conjugate() * root_minus().pow(i);
}

std::vector<MinorPair> symmetric_leading_minors(std::size_t i_max) {
    if (i_max == 0) throw InvalidParameter("minor sequence needs i_max >= 1");
    const auto values = leading_minor_values(exact_rung_symmetric(i_max), i_max);
    std::vector<MinorPair> out;
    for (std::size_t i = 1; i <= i_max; ++i) out.push_back({i, values[i], symmetric_minor_closed(i)});
    return out;
}

std::vector<MinorPair> antisymmetric_leading_minors(std::size_t i_max) {
    if (i_max == 0) throw InvalidParameter("minor sequence needs i_max >= 1");
    const auto values = leading_minor_values(exact_rung_antisymmetric(i_max), i_max);
    std::vector<MinorPair> out;
    for (std::size_t i = 1; i <= i_max; ++i) {
        const Rational closed =
            antisymmetric_minor_closed_surd(i).to_rational("closed-form w_" + std::to_string(i));
        out.push_back({i, values[i], closed});
    }
    return out;
}

Rational principal_minor_sum(const RatMatrix& a, std::size_t minor_order) {
    if (minor_order > a.order()) return Rational(0);
    Rational total(0);
    std::vector<std::size_t> chosen;
    chosen.reserve(minor_order);
    subset_minor_sum(a, minor_order, 0, chosen, total);
    return total;
}

SymmetricCoefficients symmetric_coefficients(std::size_t n) {
    if (n == 0) throw InvalidParameter("coefficients need n >= 1");
    const Rational seventh(BigInt(1), BigInt(7));
    const long nn = static_cast<long>(n);
    const Rational scale = seventh.pow(nn - 1);

    SymmetricCoefficients out{n, Rational(7 * nn + 3) / Rational(25) * scale, Rational(0),
                              Rational(49 * nn * nn * nn + 63 * nn * nn + 38 * nn) / Rational(150) * scale,
                              Rational(0), n <= kEnumerationLimit};

    if (out.oracle_enumerated) {
        const RatMatrix m = exact_rung_symmetric(n);
        out.lowest_oracle = principal_minor_sum(m, n);
        out.second_oracle = principal_minor_sum(m, n - 1);
    } else {
        // Deleting row/column i (1-based) of the (n+1)-order matrix leaves a
        // leading block of order i-1 and a trailing block of order n+1-i that
        // mirrors a leading block. Deleting i < j also leaves an inner block of
        // order j-i-1.
        const auto m = leading_minor_values(exact_rung_symmetric(n), n);
        std::map<std::size_t, Rational> inner;
        Rational lowest(0);
        Rational second(0);
        for (std::size_t i = 1; i <= n + 1; ++i) lowest += m[i - 1] * m[n + 1 - i];
        for (std::size_t i = 1; i <= n + 1; ++i) {
            for (std::size_t j = i + 1; j <= n + 1; ++j) {
                const std::size_t gap = j - i - 1;
                auto it = inner.find(gap);
                if (it == inner.end()) it = inner.emplace(gap, inner_block_determinant(gap)).first;
                second += m[i - 1] * m[n + 1 - j] * it->second;
            }
        }
        out.lowest_oracle = lowest;
        out.second_oracle = second;
    }

    if (out.lowest_closed != out.lowest_oracle) {
        throw ConsistencyError("(-1)^n a_n at n=" + std::to_string(n) + ": closed " +
                               out.lowest_closed.to_string() + " vs oracle " + out.lowest_oracle.to_string());
    }
    if (out.second_closed != out.second_oracle) {
        throw ConsistencyError("(-1)^(n-1) a_(n-1) at n=" + std::to_string(n) + ": closed " +
                               out.second_closed.to_string() + " vs oracle " + out.second_oracle.to_string());
    }
    return out;
}

AntisymmetricDeterminant antisymmetric_determinant(std::size_t n) {
    if (n == 0) throw InvalidParameter("determinant needs n >= 1");
    const RatMatrix a = exact_rung_antisymmetric(n);
    const auto w = leading_minor_values(a, n);
    const Rational three_fifths(BigInt(3), BigInt(5));

    const QuadSurd difference = root_plus().pow(n + 1) - root_minus().pow(n + 1);
    const QuadSurd closed = QuadSurd(Rational(0), Rational(BigInt(49), BigInt(75))) * difference;

    const Rational w_n_closed = antisymmetric_minor_closed_surd(n).to_rational("closed-form w_n");
    const Rational w_prev_closed = antisymmetric_minor_closed_surd(n - 1).to_rational("closed-form w_(n-1)");

    return AntisymmetricDeterminant{
        n,
        closed.to_rational("closed-form det at n=" + std::to_string(n)),
        three_fifths * w[n] - kEndCouplingSquared * w[n - 1],
        three_fifths * w_n_closed - kEndCouplingSquared * w_prev_closed,
        bareiss_det(a),
    };
}

AntisymmetricCoefficient antisymmetric_coefficient(std::size_t n) {
    if (n == 0) throw InvalidParameter("coefficient needs n >= 1");
    const RatMatrix a = exact_rung_antisymmetric(n);
    const auto w = leading_minor_values(a, n);

    Rational convolution(0);
    for (std::size_t i = 0; i <= n; ++i) convolution += w[i] * w[n - i];

    const QuadSurd x1 = root_plus();
    const QuadSurd x2 = root_minus();
    const long nn = static_cast<long>(n);
    const QuadSurd common = QuadSurd(Rational(343 * nn + 441) / Rational(150)) * (x1.pow(n + 1) + x2.pow(n + 1)) -
                            QuadSurd(Rational(BigInt(21), BigInt(50))) * (x1.pow(n) + x2.pow(n));
    const QuadSurd tail = QuadSurd(Rational(0), Rational(BigInt(14), BigInt(225))) * (x1.pow(n) - x2.pow(n));

    AntisymmetricCoefficient out{
        n,
        (common + tail).to_rational("plus-sign coefficient variant"),
        (common - tail).to_rational("minus-sign coefficient variant"),
        convolution,
        std::nullopt,
    };
    if (n <= kEnumerationLimit) out.enumerated_oracle = principal_minor_sum(a, n);
    return out;
}

}  // namespace polyprism
