#pragma once

#include <cstddef>
#include <vector>

#include "polyprism/rational.hpp"

namespace polyprism {

/// Dense square matrix over an exact scalar (BigInt or Rational).
template <typename Scalar>
class ExactMatrix {
public:
    ExactMatrix() = default;
    explicit ExactMatrix(std::size_t order) : order_(order), data_(order * order, Scalar(0)) {}

    std::size_t order() const noexcept { return order_; }
    Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * order_ + j]; }
    const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * order_ + j]; }

    /// Rows and columns restricted to `indices`, in the given order.
    ExactMatrix principal_submatrix(const std::vector<std::size_t>& indices) const {
        ExactMatrix out(indices.size());
        for (std::size_t i = 0; i < indices.size(); ++i)
            for (std::size_t j = 0; j < indices.size(); ++j) out(i, j) = (*this)(indices[i], indices[j]);
        return out;
    }

    ExactMatrix leading(std::size_t count) const {
        std::vector<std::size_t> idx(count);
        for (std::size_t i = 0; i < count; ++i) idx[i] = i;
        return principal_submatrix(idx);
    }

    bool is_symmetric() const {
        for (std::size_t i = 0; i < order_; ++i)
            for (std::size_t j = i + 1; j < order_; ++j)
                if (!((*this)(i, j) == (*this)(j, i))) return false;
        return true;
    }

private:
    std::size_t order_ = 0;
    std::vector<Scalar> data_;
};

using IntMatrix = ExactMatrix<BigInt>;
using RatMatrix = ExactMatrix<Rational>;

/// Fraction-free (Bareiss) elimination with row pivoting on zero pivots.
/// The empty matrix has determinant 1.
BigInt bareiss_det(IntMatrix a);

/// Scales each row by the lcm of its denominators, runs the integer
/// elimination and divides the scaling back out.
Rational bareiss_det(const RatMatrix& a);

}  // namespace polyprism
