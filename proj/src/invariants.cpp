#include "polyprism/invariants.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>

#include "polyprism/error.hpp"
#include "polyprism/exact_matrix.hpp"
#include "polyprism/spectral.hpp"

namespace polyprism {

namespace {

constexpr std::uint32_t kUnreached = std::numeric_limits<std::uint32_t>::max();

// Reciprocal sum over a spectrum whose smallest eigenvalue is the single
// zero of a connected graph.
double reciprocal_sum_skipping_zero(const Spectrum& spectrum, const char* what) {
    if (spectrum.size() >= 2 && spectrum[1] <= 1e-10) {
        throw RankAnomaly(std::string(what) + " has more than one zero eigenvalue; graph is disconnected");
    }
    double s = 0.0;
    for (std::size_t k = 1; k < spectrum.size(); ++k) s += 1.0 / spectrum[k];
    return s;
}

}  // namespace

DistanceMatrix distance_matrix(const Graph& g) {
    const std::size_t n = g.order();
    std::vector<std::uint32_t> d(n * n, kUnreached);
    std::deque<Vertex> queue;
    for (Vertex source = 0; source < n; ++source) {
        std::uint32_t* row = d.data() + source * n;
        row[source] = 0;
        queue.assign(1, source);
        while (!queue.empty()) {
            const Vertex v = queue.front();
            queue.pop_front();
            for (Vertex w : g.neighbors(v)) {
                if (row[w] == kUnreached) {
                    row[w] = row[v] + 1;
                    queue.push_back(w);
                }
            }
        }
        for (Vertex target = 0; target < n; ++target) {
            if (row[target] == kUnreached) {
                throw UnreachableVertex("vertex " + std::to_string(target) + " unreachable from " +
                                        std::to_string(source));
            }
        }
    }
    return DistanceMatrix(n, std::move(d));
}

BigInt wiener(const DistanceMatrix& d) {
    BigInt total = 0;
    for (std::size_t i = 0; i < d.order(); ++i) {
        unsigned long row = 0;
        for (std::size_t j = i + 1; j < d.order(); ++j) row += d(i, j);
        total += row;
    }
    return total;
}

BigInt wiener(const Graph& g) { return wiener(distance_matrix(g)); }

BigInt gutman(const Graph& g, const DistanceMatrix& d) {
    BigInt total = 0;
    for (std::size_t i = 0; i < d.order(); ++i) {
        BigInt row = 0;
        for (std::size_t j = i + 1; j < d.order(); ++j) {
            row += static_cast<unsigned long>(g.degree(j)) * d(i, j);
        }
        total += row * static_cast<unsigned long>(g.degree(i));
    }
    return total;
}

BigInt gutman(const Graph& g) { return gutman(g, distance_matrix(g)); }

ResistanceMatrix resistance_matrix(const Graph& g) {
    const SymMatrix pinv = pseudoinverse_psd(laplacian(g), 1);
    const std::size_t n = g.order();
    std::vector<double> r(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double value = std::max(0.0, pinv(i, i) + pinv(j, j) - 2.0 * pinv(i, j));
            r[i * n + j] = value;
            r[j * n + i] = value;
        }
    }
    return ResistanceMatrix(n, std::move(r));
}

double relative_delta(double a, double b) {
    const double scale = std::max(std::abs(a), std::abs(b));
    if (scale == 0.0) return 0.0;
    return std::abs(a - b) / scale;
}

TwoRouteValue kirchhoff_index(const Graph& g, const ResistanceMatrix& r) {
    double by_resistance = 0.0;
    for (std::size_t i = 0; i < r.order(); ++i)
        for (std::size_t j = i + 1; j < r.order(); ++j) by_resistance += r(i, j);
    const Spectrum mu = sym_eigenvalues(laplacian(g));
    const double by_spectrum =
        static_cast<double>(g.order()) * reciprocal_sum_skipping_zero(mu, "Laplacian");
    return {by_resistance, by_spectrum, relative_delta(by_resistance, by_spectrum)};
}

TwoRouteValue kirchhoff_index(const Graph& g) { return kirchhoff_index(g, resistance_matrix(g)); }

TwoRouteValue degree_kirchhoff_index(const Graph& g, const ResistanceMatrix& r) {
    double by_resistance = 0.0;
    for (std::size_t i = 0; i < r.order(); ++i) {
        double row = 0.0;
        for (std::size_t j = i + 1; j < r.order(); ++j) row += static_cast<double>(g.degree(j)) * r(i, j);
        by_resistance += static_cast<double>(g.degree(i)) * row;
    }
    const Spectrum lambda = sym_eigenvalues(normalized_laplacian(g));
    const double by_spectrum =
        2.0 * static_cast<double>(g.size()) * reciprocal_sum_skipping_zero(lambda, "normalized Laplacian");
    return {by_resistance, by_spectrum, relative_delta(by_resistance, by_spectrum)};
}

TwoRouteValue degree_kirchhoff_index(const Graph& g) { return degree_kirchhoff_index(g, resistance_matrix(g)); }

double spanning_trees_spectral(const Graph& g) {
    if (g.size() == 0) return 1.0;
    const Spectrum lambda = sym_eigenvalues(normalized_laplacian(g));
    double log_value = -std::log(2.0 * static_cast<double>(g.size()));
    for (Vertex v = 0; v < g.order(); ++v) log_value += std::log(static_cast<double>(g.degree(v)));
    for (std::size_t k = 1; k < lambda.size(); ++k) log_value += std::log(lambda[k]);
    return std::exp(log_value);
}

SpanningTreeCount spanning_trees(const Graph& g) {
    if (!g.is_connected()) throw UnreachableVertex("spanning trees need a connected graph");
    const std::size_t n = g.order();
    IntMatrix reduced(n == 0 ? 0 : n - 1);
    for (Vertex v = 1; v < n; ++v) reduced(v - 1, v - 1) = static_cast<unsigned long>(g.degree(v));
    for (const auto& [a, b] : g.edges()) {
        if (a == 0 || b == 0) continue;
        reduced(a - 1, b - 1) = -1;
        reduced(b - 1, a - 1) = -1;
    }
    BigInt exact = bareiss_det(std::move(reduced));
    const double spectral = spanning_trees_spectral(g);
    const double delta = relative_delta(exact.get_d(), spectral);
    return {std::move(exact), spectral, delta, !(delta <= kSpanningTreeProbeTolerance)};
}

}  // namespace polyprism
