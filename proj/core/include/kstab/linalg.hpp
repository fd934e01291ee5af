#pragma once

// Small dense exact linear algebra over Q. Sizes here are tiny (d <= 8, a
// few dozen rows), so plain Gauss-Jordan elimination is all we need.

#include <cstddef>
#include <optional>
#include <vector>

#include "kstab/rational.hpp"

namespace kstab {

class MatQ {
 public:
  MatQ() = default;
  MatQ(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

  static MatQ from_rows(const std::vector<VecQ>& rows, std::size_t cols);
  static MatQ identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  VecQ row(std::size_t i) const;
  VecQ col(std::size_t j) const;
  MatQ transpose() const;

  friend MatQ operator*(const MatQ& a, const MatQ& b);
  friend VecQ operator*(const MatQ& a, const VecQ& v);
  friend bool operator==(const MatQ& a, const MatQ& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Row-reduces in place to reduced row echelon form; returns the pivot columns.
std::vector<std::size_t> rref(MatQ& m);

std::size_t rank(MatQ m);
std::size_t rank(const std::vector<VecQ>& rows, std::size_t cols);

/// Basis of {x : m x = 0}.
std::vector<VecQ> nullspace(MatQ m);
std::vector<VecQ> nullspace(const std::vector<VecQ>& rows, std::size_t cols);

Rational determinant(MatQ m);

/// Unique solution of a square system, or nullopt when singular.
std::optional<VecQ> solve(MatQ a, VecQ b);

std::optional<MatQ> inverse(const MatQ& a);

/// vᵀ S w
Rational bilinear(const MatQ& s, const VecQ& v, const VecQ& w);

}  // namespace kstab
