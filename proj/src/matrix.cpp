#include "twcech/matrix.hpp"

namespace twcech {

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
  IntegerMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, Integer(1));
  return m;
}

IntegerMatrix IntegerMatrix::from_dense(const DenseMatrix& d) {
  IntegerMatrix m(d.rows(), d.cols());
  for (Eigen::Index i = 0; i < d.rows(); ++i)
    for (Eigen::Index j = 0; j < d.cols(); ++j)
      if (d(i, j) != 0) m.entries_[{i, j}] = d(i, j);
  return m;
}

Integer IntegerMatrix::get(std::size_t i, std::size_t j) const {
  auto it = entries_.find({i, j});
  return it == entries_.end() ? Integer(0) : it->second;
}

void IntegerMatrix::set(std::size_t i, std::size_t j, const Integer& v) {
  if (i >= rows_ || j >= cols_)
    throw IndexOutOfRange("matrix entry (" + std::to_string(i) + "," +
                          std::to_string(j) + ") outside " +
                          std::to_string(rows_) + "x" + std::to_string(cols_));
  if (v == 0)
    entries_.erase({i, j});
  else
    entries_[{i, j}] = v;
}

void IntegerMatrix::add(std::size_t i, std::size_t j, const Integer& v) {
  set(i, j, get(i, j) + v);
}

DenseMatrix IntegerMatrix::to_dense() const {
  DenseMatrix d = DenseMatrix::Zero(rows_, cols_);
  for (const auto& [ij, v] : entries_) d(ij.first, ij.second) = v;
  return d;
}

IntegerMatrix IntegerMatrix::operator*(const IntegerMatrix& o) const {
  if (cols_ != o.rows_)
    throw LengthMismatch("matrix product " + std::to_string(rows_) + "x" +
                         std::to_string(cols_) + " by " +
                         std::to_string(o.rows_) + "x" +
                         std::to_string(o.cols_));
  std::vector<std::vector<std::pair<std::size_t, Integer>>> by_row(o.rows_);
  for (const auto& [ij, v] : o.entries_) by_row[ij.first].emplace_back(ij.second, v);
  std::map<std::pair<std::size_t, std::size_t>, Integer> acc;
  for (const auto& [ij, v] : entries_)
    for (const auto& [col, w] : by_row[ij.second]) acc[{ij.first, col}] += v * w;
  IntegerMatrix r(rows_, o.cols_);
  for (const auto& [ij, v] : acc)
    if (v != 0) r.entries_[ij] = v;
  return r;
}

DenseVector to_dense(const std::vector<Integer>& v) {
  DenseVector d(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) d(i) = v[i];
  return d;
}

std::vector<Integer> to_std(const DenseVector& v) {
  return std::vector<Integer>(v.data(), v.data() + v.size());
}

}  // namespace twcech
