#include "polyprism/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "polyprism/error.hpp"

namespace polyprism {

SymMatrix laplacian(const Graph& g) {
    SymMatrix l(g.order());
    for (Vertex v = 0; v < g.order(); ++v) l.set(v, v, static_cast<double>(g.degree(v)));
    for (const auto& [a, b] : g.edges()) l.set(a, b, -1.0);
    return l;
}

SymMatrix normalized_laplacian(const Graph& g) {
    SymMatrix l(g.order());
    for (Vertex v = 0; v < g.order(); ++v) l.set(v, v, g.degree(v) > 0 ? 1.0 : 0.0);
    for (const auto& [a, b] : g.edges()) {
        const double da = static_cast<double>(g.degree(a));
        const double db = static_cast<double>(g.degree(b));
        l.set(a, b, -1.0 / std::sqrt(da * db));
    }
    return l;
}

namespace detail {

EigenDecomposition eigen_decompose(const SymMatrix& input) {
    const std::size_t n = input.order();
    std::vector<std::vector<double>> a = input.rows();
    std::vector<std::vector<double>> v(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) v[i][i] = 1.0;

    auto off_norm = [&] {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (i != j) s += a[i][j] * a[i][j];
        return std::sqrt(s);
    };

    const double threshold = kJacobiOffDiagonalTolerance * input.norm_frobenius();
    bool converged = false;
    double off = off_norm();
    for (int sweep = 0; sweep < kJacobiMaxSweeps; ++sweep) {
        if (off <= threshold) {
            converged = true;
            break;
        }
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = a[p][q];
                if (apq == 0.0) continue;
                const double theta = (a[q][q] - a[p][p]) / (2.0 * apq);
                double t;
                if (std::abs(theta) > 1e150) {
                    t = 0.5 / theta;
                } else {
                    t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                    if (theta < 0.0) t = -t;
                }
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    const double akp = a[k][p];
                    const double akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double apk = a[p][k];
                    const double aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double vkp = v[k][p];
                    const double vkq = v[k][q];
                    v[k][p] = c * vkp - s * vkq;
                    v[k][q] = s * vkp + c * vkq;
                }
            }
        }
        off = off_norm();
    }
    if (!converged && off > threshold) {
        throw NumericFailure("Jacobi eigensolver did not converge in " +
                                 std::to_string(kJacobiMaxSweeps) + " sweeps",
                             off);
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t i, std::size_t j) { return a[i][i] < a[j][j]; });

    EigenDecomposition out;
    out.values.reserve(n);
    out.vectors.reserve(n);
    for (std::size_t k : order) {
        out.values.push_back(a[k][k]);
        std::vector<double> column(n);
        for (std::size_t i = 0; i < n; ++i) column[i] = v[i][k];
        out.vectors.push_back(std::move(column));
    }

    const double limit = kEigenResidualTolerance * input.norm_inf();
    for (std::size_t k = 0; k < n; ++k) {
        double worst = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            double aq = 0.0;
            for (std::size_t j = 0; j < n; ++j) aq += input(i, j) * out.vectors[k][j];
            worst = std::max(worst, std::abs(aq - out.values[k] * out.vectors[k][i]));
        }
        if (worst > limit) {
            throw NumericFailure("eigenpair residual above tolerance", worst);
        }
    }
    return out;
}

}  // namespace detail

Spectrum sym_eigenvalues(const SymMatrix& a) {
    return Spectrum{detail::eigen_decompose(a).values};
}

BlockSplit split_blocks(const Graph& g, const std::vector<Vertex>& pairing) {
    const std::size_t total = g.order();
    if (pairing.size() != total) throw InvalidParameter("pairing size differs from graph order");
    if (total % 2 != 0) throw StructureError("odd vertex count cannot split into paired halves");
    const std::size_t half = total / 2;
    for (Vertex x = 0; x < total; ++x) {
        const Vertex image = pairing[x];
        if (image >= total || pairing[image] != x) {
            throw StructureError("pairing is not an involution at vertex " + std::to_string(x));
        }
        if (image == x) throw StructureError("pairing fixes vertex " + std::to_string(x));
        if ((x < half) == (image < half)) {
            throw StructureError("pairing keeps vertex " + std::to_string(x) + " inside its half");
        }
    }

    const SymMatrix l = normalized_laplacian(g);
    auto entry_name = [&](const char* block, std::size_t i, std::size_t j) {
        std::ostringstream out;
        out << block << "(" << i << "," << j << ")";
        return out.str();
    };

    SymMatrix sym(half);
    SymMatrix anti(half);
    for (std::size_t i = 0; i < half; ++i) {
        for (std::size_t j = 0; j < half; ++j) {
            const double b11 = l(i, j);
            const double b22 = l(pairing[i], pairing[j]);
            const double b12 = l(i, pairing[j]);
            const double b21 = l(pairing[i], j);
            if (b11 != b22) {
                throw StructureError("block V11 differs from V22 at " + entry_name("V11", i, j));
            }
            if (b12 != b21) {
                throw StructureError("block V12 differs from V21 at " + entry_name("V12", i, j));
            }
            if (j >= i) {
                sym.set(i, j, b11 + b12);
                anti.set(i, j, b11 - b12);
            }
        }
    }
    return BlockSplit{std::move(sym), std::move(anti)};
}

namespace {

SymMatrix tridiagonal_pattern(std::size_t n, double end_diagonal, double inner_diagonal) {
    const std::size_t order = n + 1;
    const double end_coupling = -1.0 / std::sqrt(35.0);
    const double inner_coupling = -1.0 / 7.0;
    SymMatrix m(order);
    for (std::size_t i = 0; i < order; ++i) {
        const bool end = (i == 0 || i + 1 == order);
        m.set(i, i, end ? end_diagonal : inner_diagonal);
    }
    for (std::size_t i = 0; i + 1 < order; ++i) {
        const bool end = (i == 0 || i + 2 == order);
        m.set(i, i + 1, end ? end_coupling : inner_coupling);
    }
    return m;
}

}  // namespace

ReducedMatrices reduced_matrices(std::size_t n) {
    if (n == 0) throw InvalidParameter("reduced matrices need n >= 1");
    SymMatrix sym = tridiagonal_pattern(n, 1.0 / 5.0, 2.0 / 7.0);
    SymMatrix anti = tridiagonal_pattern(n, 3.0 / 5.0, 4.0 / 7.0);

    // 1/2 of the symmetric block is [[C, D], [D, C]] with C = (sym + anti) / 2
    // and D = (sym - anti) / 2.
    const std::size_t rung = n + 1;
    SymMatrix rebuilt(2 * rung);
    for (std::size_t i = 0; i < rung; ++i) {
        for (std::size_t j = i; j < rung; ++j) {
            const double c = sym(i, j) + anti(i, j);
            const double d = sym(i, j) - anti(i, j);
            rebuilt.set(i, j, c);
            rebuilt.set(rung + i, rung + j, c);
            rebuilt.set(i, rung + j, d);
            rebuilt.set(j, rung + i, d);
        }
    }
    const BlockSplit split = split_blocks(strong_prism_polyomino(n), prism_pairing(n));
    const double error = max_abs_difference(rebuilt, split.symmetric);
    const bool pattern_regime = n >= 2;
    if (pattern_regime && error > 1e-12) {
        std::ostringstream msg;
        msg << "reduced matrices do not rebuild the symmetric block (max error " << error << ")";
        throw StructureError(msg.str());
    }
    return ReducedMatrices{std::move(sym), std::move(anti), pattern_regime, error};
}

SymMatrix pseudoinverse_psd(const SymMatrix& a, std::size_t max_null_dimension) {
    const auto eig = detail::eigen_decompose(a);
    const double cutoff = 1e-10 * a.norm_inf();
    if (!eig.values.empty() && eig.values.front() < -1e-9) {
        std::ostringstream msg;
        msg << "matrix is not positive semidefinite (eigenvalue " << eig.values.front() << ")";
        throw InvalidParameter(msg.str());
    }
    const std::size_t n = a.order();
    std::size_t null_dimension = 0;
    SymMatrix pinv(n);
    for (std::size_t k = 0; k < n; ++k) {
        if (eig.values[k] <= cutoff) {
            ++null_dimension;
            continue;
        }
        const double inv = 1.0 / eig.values[k];
        const auto& q = eig.vectors[k];
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j) pinv.set(i, j, pinv(i, j) + inv * q[i] * q[j]);
    }
    if (null_dimension > max_null_dimension) {
        throw RankAnomaly(std::to_string(null_dimension) + " near-zero eigenvalues, expected at most " +
                          std::to_string(max_null_dimension));
    }
    return pinv;
}

}  // namespace polyprism
