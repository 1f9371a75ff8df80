#pragma once

// Exact integer matrices: a sparse coordinate form used for assembled
// differentials and an Eigen dense form used by the elimination routines.

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include <Eigen/Core>
#include <boost/multiprecision/eigen.hpp>

#include "twcech/coefficients.hpp"

namespace twcech {

using DenseMatrix = Eigen::Matrix<Integer, Eigen::Dynamic, Eigen::Dynamic>;
using DenseVector = Eigen::Matrix<Integer, Eigen::Dynamic, 1>;

class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}

  static IntegerMatrix identity(std::size_t n);
  static IntegerMatrix from_dense(const DenseMatrix& m);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Integer get(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, const Integer& v);
  void add(std::size_t i, std::size_t j, const Integer& v);

  /// Nonzero entries keyed by (row, col) in row-major order.
  const std::map<std::pair<std::size_t, std::size_t>, Integer>& entries() const {
    return entries_;
  }
  std::size_t nonzeros() const { return entries_.size(); }
  bool is_zero() const { return entries_.empty(); }

  DenseMatrix to_dense() const;

  IntegerMatrix operator*(const IntegerMatrix& o) const;
  bool operator==(const IntegerMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && entries_ == o.entries_;
  }

  /// y = A x over any scalar with an integer multiple.
  template <typename A>
  std::vector<A> apply(const std::vector<A>& x) const {
    if (x.size() != cols_)
      throw LengthMismatch("matrix with " + std::to_string(cols_) +
                           " columns applied to a vector of length " +
                           std::to_string(x.size()));
    std::vector<A> y(rows_);
    for (const auto& [ij, v] : entries_)
      y[ij.first] = y[ij.first] + scale(x[ij.second], v);
    return y;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::map<std::pair<std::size_t, std::size_t>, Integer> entries_;
};

DenseVector to_dense(const std::vector<Integer>& v);
std::vector<Integer> to_std(const DenseVector& v);

}  // namespace twcech
