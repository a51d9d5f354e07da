#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "polyprism/exact_matrix.hpp"
#include "polyprism/quad_surd.hpp"
#include "polyprism/rational.hpp"

namespace polyprism {

// Exact images of the reduced tridiagonal matrices.
//
// The floating matrices carry -1/sqrt(35) end couplings, so they are not
// rational. A tridiagonal matrix's principal minors depend only on its
// diagonal and on the products of mirrored off-diagonal pairs, so the image
// keeps the diagonal, puts -1 above the diagonal and -c^2 below it, where c is
// the original coupling. That is a real diagonal similarity of the original;
// every principal minor (and the characteristic polynomial) is unchanged.
// The image is not symmetric.

RatMatrix exact_rung_symmetric(std::size_t n);
RatMatrix exact_rung_antisymmetric(std::size_t n);

/// (1/5)(1/7)^{i-1}
Rational symmetric_minor_closed(std::size_t i);
/// ((21+7 sqrt3)/30) x1^i + ((21-7 sqrt3)/30) x2^i with x1,2 = (2 +- sqrt3)/7.
/// Returned unrationalised; i = 0 gives 7/5, not the empty determinant 1.
QuadSurd antisymmetric_minor_closed_surd(std::size_t i);

struct MinorPair {
    std::size_t index;
    Rational determinant;  // leading principal minor by elimination
    Rational closed_form;
    bool agree() const { return determinant == closed_form; }
};

/// Leading principal minors m_1..m_{i_max} of the rung-symmetric matrix.
std::vector<MinorPair> symmetric_leading_minors(std::size_t i_max);

/// Leading principal minors w_1..w_{i_max} of the rung-antisymmetric matrix.
/// Throws ConsistencyError if a closed-form value keeps a sqrt(3) part.
std::vector<MinorPair> antisymmetric_leading_minors(std::size_t i_max);

/// Sum of all principal minors of the given order (an elementary symmetric
/// function of the eigenvalues). Enumerates subsets; meant for small matrices.
Rational principal_minor_sum(const RatMatrix& a, std::size_t minor_order);

/// The two lowest characteristic-polynomial coefficients of the
/// rung-symmetric matrix, whose constant term vanishes:
///   lowest = (-1)^n a_n      (sum of n x n principal minors)
///   second = (-1)^{n-1} a_{n-1}  (sum of (n-1) x (n-1) principal minors)
struct SymmetricCoefficients {
    std::size_t n;
    Rational lowest_closed;
    Rational lowest_oracle;
    Rational second_closed;
    Rational second_oracle;
    bool oracle_enumerated;  // subset enumeration (n <= 10) vs minor convolution
};

/// Throws ConsistencyError, quoting both values, when a closed form and its
/// oracle disagree.
SymmetricCoefficients symmetric_coefficients(std::size_t n);

inline constexpr std::size_t kEnumerationLimit = 10;

/// Determinant of the rung-antisymmetric matrix by four routes. Disagreement
/// is data, not an error: for n = 1 the closed form differs from the rest.
struct AntisymmetricDeterminant {
    std::size_t n;
    Rational closed_form;         // (49 sqrt3/75)[x1^{n+1} - x2^{n+1}]
    Rational expansion;           // (3/5) w_n - (1/35) w_{n-1}, w_0 = 1
    Rational expansion_extended;  // same with closed-form w_i (w_0 = 7/5)
    Rational determinant;         // elimination on the full matrix
};

AntisymmetricDeterminant antisymmetric_determinant(std::size_t n);

/// (-1)^n b_n for the rung-antisymmetric matrix (sum of n x n principal
/// minors). Two printed closed forms differ only in the sign of their
/// (14 sqrt3/225)[x1^n - x2^n] term; both are evaluated along with the
/// convolution sum_{i=0}^{n} w_i w_{n-i} (w_0 = 1).
struct AntisymmetricCoefficient {
    std::size_t n;
    Rational plus_variant;
    Rational minus_variant;
    Rational convolution_oracle;
    std::optional<Rational> enumerated_oracle;  // for n <= kEnumerationLimit
    bool plus_matches() const { return plus_variant == convolution_oracle; }
    bool minus_matches() const { return minus_variant == convolution_oracle; }
};

AntisymmetricCoefficient antisymmetric_coefficient(std::size_t n);

}  // namespace polyprism
