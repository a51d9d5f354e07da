#include "polyprism/sym_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>

#include "polyprism/error.hpp"

namespace polyprism {

SymMatrix::SymMatrix(std::size_t order) : order_(order), data_(order * order, 0.0) {
    if (order == 0) throw InvalidParameter("matrix order must be >= 1");
}

SymMatrix SymMatrix::from_rows(const std::vector<std::vector<double>>& rows) {
    SymMatrix m(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != rows.size()) throw InvalidParameter("matrix rows must be square");
        for (std::size_t j = i; j < rows.size(); ++j) m.set(i, j, rows[i][j]);
    }
    return m;
}

SymMatrix SymMatrix::identity(std::size_t order) {
    SymMatrix m(order);
    for (std::size_t i = 0; i < order; ++i) m.set(i, i, 1.0);
    return m;
}

void SymMatrix::set(std::size_t i, std::size_t j, double value) {
    data_[i * order_ + j] = value;
    data_[j * order_ + i] = value;
}

double SymMatrix::trace() const {
    double t = 0.0;
    for (std::size_t i = 0; i < order_; ++i) t += (*this)(i, i);
    return t;
}

double SymMatrix::norm_inf() const {
    double best = 0.0;
    for (std::size_t i = 0; i < order_; ++i) {
        double row = 0.0;
        for (std::size_t j = 0; j < order_; ++j) row += std::abs((*this)(i, j));
        best = std::max(best, row);
    }
    return best;
}

double SymMatrix::norm_frobenius() const {
    double s = 0.0;
    for (double x : data_) s += x * x;
    return std::sqrt(s);
}

SymMatrix SymMatrix::operator+(const SymMatrix& other) const {
    if (other.order_ != order_) throw InvalidParameter("matrix order mismatch");
    SymMatrix out(order_);
    for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] = data_[k] + other.data_[k];
    return out;
}

SymMatrix SymMatrix::operator-(const SymMatrix& other) const {
    if (other.order_ != order_) throw InvalidParameter("matrix order mismatch");
    SymMatrix out(order_);
    for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] = data_[k] - other.data_[k];
    return out;
}

SymMatrix SymMatrix::scaled(double factor) const {
    SymMatrix out(order_);
    for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] = data_[k] * factor;
    return out;
}

SymMatrix SymMatrix::multiply_symmetric(const SymMatrix& other) const {
    if (other.order_ != order_) throw InvalidParameter("matrix order mismatch");
    SymMatrix out(order_);
    for (std::size_t i = 0; i < order_; ++i) {
        for (std::size_t j = i; j < order_; ++j) {
            double s = 0.0;
            for (std::size_t k = 0; k < order_; ++k) s += (*this)(i, k) * other(k, j);
            out.set(i, j, s);
        }
    }
    return out;
}

SymMatrix SymMatrix::block(std::size_t first, std::size_t count) const {
    if (first + count > order_) throw InvalidParameter("block exceeds matrix order");
    SymMatrix out(count);
    for (std::size_t i = 0; i < count; ++i)
        for (std::size_t j = i; j < count; ++j) out.set(i, j, (*this)(first + i, first + j));
    return out;
}

std::vector<std::vector<double>> SymMatrix::rows() const {
    std::vector<std::vector<double>> out(order_, std::vector<double>(order_));
    for (std::size_t i = 0; i < order_; ++i)
        for (std::size_t j = 0; j < order_; ++j) out[i][j] = (*this)(i, j);
    return out;
}

std::string SymMatrix::to_csv() const {
    std::ostringstream out;
    out << std::setprecision(17);
    for (std::size_t i = 0; i < order_; ++i) {
        for (std::size_t j = 0; j < order_; ++j) {
            if (j) out << ',';
            out << (*this)(i, j);
        }
        out << '\n';
    }
    return out.str();
}

double max_abs_difference(const SymMatrix& a, const SymMatrix& b) {
    if (a.order() != b.order()) throw InvalidParameter("matrix order mismatch");
    double worst = 0.0;
    for (std::size_t i = 0; i < a.order(); ++i)
        for (std::size_t j = 0; j < a.order(); ++j) worst = std::max(worst, std::abs(a(i, j) - b(i, j)));
    return worst;
}

double Spectrum::sum() const {
    double s = 0.0;
    for (double x : eigenvalues) s += x;
    return s;
}

std::vector<Spectrum::Group> Spectrum::multiplicity_groups(double tolerance) const {
    std::vector<Group> groups;
    std::size_t start = 0;
    for (std::size_t i = 1; i <= eigenvalues.size(); ++i) {
        if (i == eigenvalues.size() || eigenvalues[i] - eigenvalues[i - 1] > tolerance) {
            double mean = 0.0;
            for (std::size_t k = start; k < i; ++k) mean += eigenvalues[k];
            mean /= static_cast<double>(i - start);
            groups.push_back({mean, i - start});
            start = i;
        }
    }
    return groups;
}

}  // namespace polyprism
