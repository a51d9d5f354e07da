#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "polyprism/quad_surd.hpp"
#include "polyprism/rational.hpp"

namespace polyprism {

/// Exact value of a closed-form expression at chain length n.
///
/// The expressions were derived for the degree pattern of n >= 2 (end
/// vertices of degree 5, inner of degree 7). n = 1 evaluates but is tagged
/// pattern_regime = false.
struct ClosedFormResult {
    std::size_t n;
    Rational value;
    std::string formula_id;
    bool pattern_regime;
};

/// (2 + sqrt3)^k and its conjugate power.
QuadSurd power_plus(std::uint64_t k);
QuadSurd power_minus(std::uint64_t k);

/// Reciprocal sum of the nonzero eigenvalues of the rung-symmetric matrix:
/// (49n^3 + 63n^2 + 38n) / (6(7n + 3)).
ClosedFormResult sum_inv_alpha(std::size_t n);

/// Reciprocal sum of the eigenvalues of the rung-antisymmetric matrix,
/// evaluated in Q(sqrt3). Throws ConsistencyError if the sqrt3 part survives.
ClosedFormResult sum_inv_beta(std::size_t n);

/// The same reciprocal sum read off the characteristic polynomial:
/// (minus-sign b-coefficient closed form) / (closed-form determinant).
Rational sum_inv_beta_from_coefficients(std::size_t n);

/// Degree-Kirchhoff index assembled from the reduced spectra:
/// 4(7n+3) (4*5/6 + (2n-2)*7/8 + sum_inv_alpha/2 + sum_inv_beta/2).
ClosedFormResult kfstar_via_reduced_spectra(std::size_t n);

/// Degree-Kirchhoff index of the strong prism, full closed form.
ClosedFormResult kfstar_closed(std::size_t n);

/// Spanning-tree count 27 * 2^{8n-3} * sqrt3 * [(2+sqrt3)^{n+1} - (2-sqrt3)^{n+1}].
/// Throws ConsistencyError unless the value is a positive integer.
ClosedFormResult tau_closed(std::size_t n);

/// Gutman index 392n^3/3 + 364n^2 + 1102n/3 + 38; must be an integer.
ClosedFormResult gutman_closed(std::size_t n);

/// Ratio of the leading cubic coefficients of kfstar_closed and gutman_closed.
Rational leading_coefficient_ratio();

struct RatioPoint {
    std::size_t n;
    Rational ratio;  // kfstar_closed(n) / gutman_closed(n)
};

/// Exact ratios for n = 2..n_max (n_max >= 2).
std::vector<RatioPoint> ratio_series(std::size_t n_max);

}  // namespace polyprism
