#include "kstab/linalg.hpp"

#include <utility>

namespace kstab {

MatQ MatQ::from_rows(const std::vector<VecQ>& rows, std::size_t cols) {
  MatQ m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  return m;
}

MatQ MatQ::identity(std::size_t n) {
  MatQ m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

VecQ MatQ::row(std::size_t i) const {
  return VecQ(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
              data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

VecQ MatQ::col(std::size_t j) const {
  VecQ c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

MatQ MatQ::transpose() const {
  MatQ t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

MatQ operator*(const MatQ& a, const MatQ& b) {
  MatQ c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (sgn(a(i, k)) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

VecQ operator*(const MatQ& a, const VecQ& v) {
  VecQ r(a.rows_, Rational(0));
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t j = 0; j < a.cols_; ++j) r[i] += a(i, j) * v[j];
  return r;
}

std::vector<std::size_t> rref(MatQ& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && sgn(m(p, c)) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    Rational inv = 1 / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || sgn(m(i, c)) == 0) continue;
      Rational f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t rank(MatQ m) { return rref(m).size(); }

std::size_t rank(const std::vector<VecQ>& rows, std::size_t cols) {
  return rank(MatQ::from_rows(rows, cols));
}

std::vector<VecQ> nullspace(MatQ m) {
  auto pivots = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<VecQ> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    VecQ x = zeros(m.cols());
    x[f] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = -m(r, f);
    basis.push_back(std::move(x));
  }
  return basis;
}

std::vector<VecQ> nullspace(const std::vector<VecQ>& rows, std::size_t cols) {
  if (rows.empty()) {
    std::vector<VecQ> basis;
    for (std::size_t i = 0; i < cols; ++i) basis.push_back(unit(cols, i));
    return basis;
  }
  return nullspace(MatQ::from_rows(rows, cols));
}

Rational determinant(MatQ m) {
  const std::size_t n = m.rows();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && sgn(m(p, c)) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (sgn(m(i, c)) == 0) continue;
      Rational f = m(i, c) / m(c, c);
      for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return det;
}

std::optional<VecQ> solve(MatQ a, VecQ b) {
  const std::size_t n = a.rows();
  MatQ aug(n, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n) = b[i];
  }
  auto pivots = rref(aug);
  if (pivots.size() < n || pivots.back() >= n) return std::nullopt;
  VecQ x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = aug(i, n);
  return x;
}

std::optional<MatQ> inverse(const MatQ& a) {
  const std::size_t n = a.rows();
  MatQ aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = 1;
  }
  auto pivots = rref(aug);
  if (pivots.size() < n || pivots[n - 1] >= n) return std::nullopt;
  MatQ inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

Rational bilinear(const MatQ& s, const VecQ& v, const VecQ& w) {
  Rational acc = 0;
  for (std::size_t i = 0; i < s.rows(); ++i) {
    if (sgn(v[i]) == 0) continue;
    Rational row = 0;
    for (std::size_t j = 0; j < s.cols(); ++j) row += s(i, j) * w[j];
    acc += v[i] * row;
  }
  return acc;
}

}  // namespace kstab
