#pragma once

#include <cstddef>
#include <vector>

#include "polycf/numeric.hpp"

namespace polycf {

using QVec = std::vector<Rat>;

// Dense row-major rational matrix.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  explicit QMatrix(const std::vector<QVec>& rows);

  static QMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rat& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rat& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  QVec row(std::size_t i) const;
  QVec column(std::size_t j) const;

  friend QMatrix operator*(const QMatrix& a, const QMatrix& b);
  friend QVec operator*(const QMatrix& a, const QVec& v);
  friend bool operator==(const QMatrix& a, const QMatrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rat> data_;
};

QMatrix power(const QMatrix& m, unsigned long e);
// Exact inverse; throws PreconditionViolation when singular.
QMatrix inverse(const QMatrix& m);

Rat dot(const QVec& a, const QVec& b);
bool is_zero(const QVec& v);

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(QMatrix& m);
std::size_t rank(const std::vector<QVec>& rows, std::size_t width);
// Basis of {x : row . x = 0 for all rows}.
std::vector<QVec> nullspace(const std::vector<QVec>& rows, std::size_t width);
// Indices of a maximal linearly independent subfamily, chosen greedily in order.
std::vector<std::size_t> independent_subset(const std::vector<QVec>& vecs, std::size_t width);

// Scale to a primitive integer vector whose first nonzero entry is positive.
QVec primitive(const QVec& v);

}  // namespace polycf
