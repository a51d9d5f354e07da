#pragma once

#include <cstddef>
#include <vector>

#include "polyprism/graph.hpp"
#include "polyprism/sym_matrix.hpp"

namespace polyprism {

/// Combinatorial Laplacian D - A.
SymMatrix laplacian(const Graph& g);

/// Normalized Laplacian D^{-1/2} L D^{-1/2}: unit diagonal, -1/sqrt(d_i d_j)
/// on edges. An isolated vertex gets an all-zero row (d^{-1/2} taken as 0).
SymMatrix normalized_laplacian(const Graph& g);

namespace detail {

struct EigenDecomposition {
    std::vector<double> values;                // ascending
    std::vector<std::vector<double>> vectors;  // vectors[k] pairs with values[k]
};

/// Cyclic Jacobi; throws NumericFailure when the off-diagonal mass does not
/// reach 1e-14 ||A||_F within 100 sweeps or when an eigenpair residual
/// ||A q - lambda q||_inf exceeds 1e-10 ||A||_inf.
EigenDecomposition eigen_decompose(const SymMatrix& a);

}  // namespace detail

inline constexpr int kJacobiMaxSweeps = 100;
inline constexpr double kJacobiOffDiagonalTolerance = 1e-14;
inline constexpr double kEigenResidualTolerance = 1e-10;

/// All eigenvalues, ascending. Deterministic for a given input.
Spectrum sym_eigenvalues(const SymMatrix& a);

/// Result of block-diagonalising a normalized Laplacian along a vertex
/// involution. With the first half V1 and its image V2, the matrix reads
/// [[B11, B12], [B12, B11]] and is similar to diag(B11 + B12, B11 - B12).
struct BlockSplit {
    SymMatrix symmetric;      // B11 + B12: acts on vectors with x = x'
    SymMatrix antisymmetric;  // B11 - B12: acts on vectors with x = -x'
};

/// `pairing` must be a fixed-point-free involution mapping the first half of
/// the vertex ids onto the second. Block equality B11 == B22 and B12 == B21 is
/// checked entrywise; a mismatch throws StructureError naming the entry.
BlockSplit split_blocks(const Graph& g, const std::vector<Vertex>& pairing);

/// The two (n+1)x(n+1) tridiagonal matrices halving the symmetric block of
/// the strong prism's normalized Laplacian once more, now along the u_i <-> v_i
/// rung swap.
///
/// rung_symmetric:      diag (1/5, 2/7, ..., 2/7, 1/5)
/// rung_antisymmetric:  diag (3/5, 4/7, ..., 4/7, 3/5)
/// off-diagonal -1/sqrt(35) on the two end couplings and -1/7 inside.
///
/// The pattern assumes end vertices of degree 5 and inner vertices of degree 7,
/// which holds for n >= 2. For n = 1 every vertex of the prism has degree 5 and
/// the pattern is built literally anyway; `pattern_regime` is false and
/// `reconstruction_error` measures how far 2 [[C, D], [D, C]] lands from the
/// true symmetric block.
struct ReducedMatrices {
    SymMatrix rung_symmetric;
    SymMatrix rung_antisymmetric;
    bool pattern_regime;
    double reconstruction_error;
};

/// Throws StructureError if n >= 2 and the reconstruction differs from the
/// symmetric block of split_blocks by more than 1e-12.
ReducedMatrices reduced_matrices(std::size_t n);

/// Moore-Penrose pseudoinverse of a positive semidefinite matrix via its
/// eigendecomposition. Eigenvalues below 1e-10 ||A||_inf count as zero;
/// values down to -1e-9 are clamped. More than `max_null_dimension` zero
/// eigenvalues throws RankAnomaly.
SymMatrix pseudoinverse_psd(const SymMatrix& a, std::size_t max_null_dimension = 1);

}  // namespace polyprism
