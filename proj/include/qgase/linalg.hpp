#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace qgase {

using cd = std::complex<double>;

/// Dense row-major complex matrix.
class CMatrix {
 public:
  CMatrix() = default;
  CMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static CMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  cd& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const cd& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  cd* row(std::size_t i) { return data_.data() + i * cols_; }
  const cd* row(std::size_t i) const { return data_.data() + i * cols_; }

  cd* data() { return data_.data(); }
  const cd* data() const { return data_.data(); }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<cd> data_;
};

/// max_ij |A_ij|
double max_abs(const CMatrix& m);

/// LU factorization with partial pivoting (rows are swapped in place).
/// Throws Error(singular_system) when a pivot falls below
/// 1e-12 times the largest entry of the input matrix.
class LuFactorization {
 public:
  explicit LuFactorization(CMatrix m);

  std::size_t dim() const { return lu_.rows(); }

  /// Overwrites rhs with the solution of A x = rhs.
  void solve_in_place(std::span<cd> rhs) const;

  std::vector<cd> solve(std::span<const cd> rhs) const;

 private:
  CMatrix lu_;
  std::vector<std::size_t> perm_;
};

}  // namespace qgase
