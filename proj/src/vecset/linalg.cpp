#include "polycf/linalg.hpp"

#include <utility>

#include "polycf/error.hpp"

namespace polycf {

QMatrix::QMatrix(const std::vector<QVec>& rows) {
  rows_ = rows.size();
  cols_ = rows.empty() ? 0 : rows.front().size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionMismatch(cols_, r.size());
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

QVec QMatrix::row(std::size_t i) const {
  return QVec(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
              data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

QVec QMatrix::column(std::size_t j) const {
  QVec c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
  if (a.cols_ != b.rows_) throw DimensionMismatch(a.cols_, b.rows_);
  QMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rat& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

QVec operator*(const QMatrix& a, const QVec& v) {
  if (a.cols_ != v.size()) throw DimensionMismatch(a.cols_, v.size());
  QVec out(a.rows_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t j = 0; j < a.cols_; ++j) out[i] += a(i, j) * v[j];
  }
  return out;
}

QMatrix power(const QMatrix& m, unsigned long e) {
  QMatrix result = QMatrix::identity(m.rows());
  QMatrix base = m;
  while (e > 0) {
    if (e & 1UL) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

QMatrix inverse(const QMatrix& m) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw DimensionMismatch(n, m.cols());
  QMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  auto pivots = rref(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) {
    throw PreconditionViolation("matrix is singular");
  }
  QMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

Rat dot(const QVec& a, const QVec& b) {
  if (a.size() != b.size()) throw DimensionMismatch(a.size(), b.size());
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

bool is_zero(const QVec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

std::vector<std::size_t> rref(QMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t piv = r;
    while (piv < m.rows() && m(piv, c) == 0) ++piv;
    if (piv == m.rows()) continue;
    if (piv != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(r, j));
    Rat inv = 1 / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      Rat f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t rank(const std::vector<QVec>& rows, std::size_t width) {
  if (rows.empty()) return 0;
  QMatrix m(rows.size(), width);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != width) throw DimensionMismatch(width, rows[i].size());
    for (std::size_t j = 0; j < width; ++j) m(i, j) = rows[i][j];
  }
  return rref(m).size();
}

std::vector<QVec> nullspace(const std::vector<QVec>& rows, std::size_t width) {
  QMatrix m(rows.size(), width);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != width) throw DimensionMismatch(width, rows[i].size());
    for (std::size_t j = 0; j < width; ++j) m(i, j) = rows[i][j];
  }
  auto pivots = rref(m);
  std::vector<bool> is_pivot(width, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<QVec> basis;
  for (std::size_t free = 0; free < width; ++free) {
    if (is_pivot[free]) continue;
    QVec x(width);
    x[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = -m(r, free);
    basis.push_back(std::move(x));
  }
  return basis;
}

std::vector<std::size_t> independent_subset(const std::vector<QVec>& vecs, std::size_t width) {
  std::vector<std::size_t> chosen;
  std::vector<QVec> rows;
  std::size_t current = 0;
  for (std::size_t i = 0; i < vecs.size(); ++i) {
    rows.push_back(vecs[i]);
    std::size_t rk = rank(rows, width);
    if (rk > current) {
      chosen.push_back(i);
      current = rk;
    } else {
      rows.pop_back();
    }
  }
  return chosen;
}

QVec primitive(const QVec& v) {
  Int den = 1;
  for (const auto& x : v) den = lcm_int(den, x.get_den());
  Int g = 0;
  for (const auto& x : v) g = gcd_int(g, Int(x * den));
  if (g == 0) return v;
  QVec out(v.size());
  bool flip = false;
  for (const auto& x : v) {
    if (x != 0) {
      flip = x < 0;
      break;
    }
  }
  for (std::size_t i = 0; i < v.size(); ++i) {
    Int n = Int(v[i] * den) / g;
    out[i] = flip ? Rat(-n) : Rat(n);
  }
  return out;
}

}  // namespace polycf
