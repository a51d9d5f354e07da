#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace polyprism {

/// Dense symmetric matrix of doubles, row-major.
///
/// Symmetry is structural: set(i, j, x) writes both (i, j) and (j, i), so
/// entry(i, j) == entry(j, i) holds bit for bit.
class SymMatrix {
public:
    /// Zero matrix of the given order (order >= 1).
    explicit SymMatrix(std::size_t order);

    /// From a square row-major array; the lower triangle is mirrored from the
    /// upper one. Throws InvalidParameter if rows are ragged.
    static SymMatrix from_rows(const std::vector<std::vector<double>>& rows);
    static SymMatrix identity(std::size_t order);

    std::size_t order() const noexcept { return order_; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * order_ + j]; }
    void set(std::size_t i, std::size_t j, double value);

    double trace() const;
    /// Max absolute row sum.
    double norm_inf() const;
    double norm_frobenius() const;

    SymMatrix operator+(const SymMatrix& other) const;
    SymMatrix operator-(const SymMatrix& other) const;
    SymMatrix scaled(double factor) const;
    /// Product; symmetric only when the factors commute, so the upper triangle is kept.
    SymMatrix multiply_symmetric(const SymMatrix& other) const;

    /// Principal submatrix on the contiguous index range [first, first + count).
    SymMatrix block(std::size_t first, std::size_t count) const;

    std::vector<std::vector<double>> rows() const;
    std::string to_csv() const;

private:
    std::size_t order_;
    std::vector<double> data_;
};

double max_abs_difference(const SymMatrix& a, const SymMatrix& b);

/// Eigenvalues in ascending order, with multiplicities grouped under an
/// absolute tolerance.
struct Spectrum {
    struct Group {
        double value;
        std::size_t multiplicity;
    };

    std::vector<double> eigenvalues;

    std::size_t size() const noexcept { return eigenvalues.size(); }
    double operator[](std::size_t i) const { return eigenvalues[i]; }
    double sum() const;

    /// Consecutive eigenvalues closer than `tolerance` share a group; the
    /// group value is their mean.
    std::vector<Group> multiplicity_groups(double tolerance = 1e-8) const;
};

}  // namespace polyprism
