#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "polyprism/graph.hpp"
#include "polyprism/rational.hpp"
#include "polyprism/sym_matrix.hpp"

namespace polyprism {

/// All-pairs hop distances of a connected graph.
class DistanceMatrix {
public:
    DistanceMatrix(std::size_t order, std::vector<std::uint32_t> distances)
        : order_(order), d_(std::move(distances)) {}

    std::size_t order() const noexcept { return order_; }
    std::uint32_t operator()(std::size_t i, std::size_t j) const { return d_[i * order_ + j]; }

private:
    std::size_t order_;
    std::vector<std::uint32_t> d_;
};

/// Effective resistances with unit resistors on the edges.
class ResistanceMatrix {
public:
    ResistanceMatrix(std::size_t order, std::vector<double> resistances)
        : order_(order), r_(std::move(resistances)) {}

    std::size_t order() const noexcept { return order_; }
    double operator()(std::size_t i, std::size_t j) const { return r_[i * order_ + j]; }

private:
    std::size_t order_;
    std::vector<double> r_;
};

/// BFS from every vertex. Throws UnreachableVertex on a disconnected graph.
DistanceMatrix distance_matrix(const Graph& g);

BigInt wiener(const Graph& g);
BigInt wiener(const DistanceMatrix& d);
/// Sum over unordered pairs of d_i d_j dist(i, j).
BigInt gutman(const Graph& g);
BigInt gutman(const Graph& g, const DistanceMatrix& d);

/// r(i,j) = P(i,i) + P(j,j) - 2 P(i,j) with P the pseudoinverse of the
/// combinatorial Laplacian. Disconnected input surfaces as RankAnomaly.
ResistanceMatrix resistance_matrix(const Graph& g);

/// |a - b| / max(|a|, |b|), zero when both vanish.
double relative_delta(double a, double b);

/// A quantity computed along two independent routes.
struct TwoRouteValue {
    double resistance_route;  // sums over the resistance matrix
    double spectral_route;    // reciprocal eigenvalue sum
    double relative_delta;
};

/// Kf: sum of r_ij, and n * sum 1/mu_i over the nonzero Laplacian eigenvalues.
TwoRouteValue kirchhoff_index(const Graph& g);
TwoRouteValue kirchhoff_index(const Graph& g, const ResistanceMatrix& r);

/// Kf*: sum of d_i d_j r_ij, and 2m * sum 1/lambda_i over the nonzero
/// normalized-Laplacian eigenvalues.
TwoRouteValue degree_kirchhoff_index(const Graph& g);
TwoRouteValue degree_kirchhoff_index(const Graph& g, const ResistanceMatrix& r);

/// Drift above this between the exact and spectral spanning-tree routes sets
/// `spectral_diverged`.
inline constexpr double kSpanningTreeProbeTolerance = 1e-6;

struct SpanningTreeCount {
    BigInt exact;               // Matrix-Tree: Laplacian with row/column 0 removed
    double spectral;            // prod d_i * prod lambda_k / (2m)
    double relative_delta;
    bool spectral_diverged;     // relative_delta > kSpanningTreeProbeTolerance
};

/// The exact count is authoritative; the spectral value is a float probe.
SpanningTreeCount spanning_trees(const Graph& g);

/// The spectral probe on its own: exp(sum log d_i + sum_{k>=2} log lambda_k - log 2m).
double spanning_trees_spectral(const Graph& g);

}  // namespace polyprism
