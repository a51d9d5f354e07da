#include "polyprism/exact_matrix.hpp"

#include <utility>

namespace polyprism {

BigInt bareiss_det(IntMatrix a) {
    const std::size_t n = a.order();
    if (n == 0) return BigInt(1);
    int sign = 1;
    BigInt previous = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && a(swap_row, k) == 0) ++swap_row;
            if (swap_row == n) return BigInt(0);
            for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(swap_row, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                BigInt t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), previous.get_mpz_t());
                a(i, j) = std::move(t);
            }
            a(i, k) = 0;
        }
        previous = a(k, k);
    }
    BigInt det = a(n - 1, n - 1);
    if (sign < 0) det = -det;
    return det;
}

Rational bareiss_det(const RatMatrix& a) {
    const std::size_t n = a.order();
    IntMatrix scaled(n);
    BigInt scale = 1;
    for (std::size_t i = 0; i < n; ++i) {
        BigInt row_lcm = 1;
        for (std::size_t j = 0; j < n; ++j) {
            const BigInt den = a(i, j).denominator();
            mpz_lcm(row_lcm.get_mpz_t(), row_lcm.get_mpz_t(), den.get_mpz_t());
        }
        for (std::size_t j = 0; j < n; ++j) {
            scaled(i, j) = a(i, j).numerator() * (row_lcm / a(i, j).denominator());
        }
        scale *= row_lcm;
    }
    return Rational(bareiss_det(std::move(scaled)), scale);
}

}  // namespace polyprism
