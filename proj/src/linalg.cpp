#include "qgase/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qgase/error.hpp"
#include "qgase/kernels.hpp"

namespace qgase {

namespace {
// |re| + |im|, the usual cheap pivot magnitude
inline double cabs1(cd z) { return std::abs(z.real()) + std::abs(z.imag()); }
}  // namespace

CMatrix CMatrix::identity(std::size_t n) {
  CMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

double max_abs(const CMatrix& m) {
  double best = 0.0;
  const cd* p = m.data();
  const std::size_t count = m.rows() * m.cols();
  for (std::size_t i = 0; i < count; ++i) best = std::max(best, std::abs(p[i]));
  return best;
}

LuFactorization::LuFactorization(CMatrix m) : lu_(std::move(m)), perm_(lu_.rows()) {
  const std::size_t n = lu_.rows();
  if (lu_.cols() != n)
    fail(ErrorCode::invalid_argument, "LU requires a square matrix, got " +
                                          std::to_string(n) + "x" + std::to_string(lu_.cols()));
  double scale = 0.0;
  {
    const cd* p = lu_.data();
    for (std::size_t i = 0; i < n * n; ++i) scale = std::max(scale, cabs1(p[i]));
  }
  const double threshold = 1e-12 * scale;

  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    double best = cabs1(lu_(col, col));
    for (std::size_t i = col + 1; i < n; ++i) {
      const double v = cabs1(lu_(i, col));
      if (v > best) {
        best = v;
        piv = i;
      }
    }
    if (best <= threshold)
      fail(ErrorCode::singular_system,
           "pivot " + std::to_string(col) + " magnitude " + std::to_string(best) +
               " below threshold (resonant wave number?)");
    perm_[col] = piv;
    if (piv != col) std::swap_ranges(lu_.row(col), lu_.row(col) + n, lu_.row(piv));

    const cd inv = 1.0 / lu_(col, col);
    const std::size_t tail = n - col - 1;
    for (std::size_t i = col + 1; i < n; ++i) lu_(i, col) *= inv;
    for (std::size_t i = col + 1; i < n; ++i)
      kernels::zaxpy(lu_.row(i) + col + 1, lu_.row(col) + col + 1, -lu_(i, col), tail);
  }
}

void LuFactorization::solve_in_place(std::span<cd> rhs) const {
  const std::size_t n = dim();
  if (rhs.size() != n)
    fail(ErrorCode::invalid_argument, "rhs size " + std::to_string(rhs.size()) +
                                          " does not match system dimension " + std::to_string(n));
  for (std::size_t i = 0; i < n; ++i)
    if (perm_[i] != i) std::swap(rhs[i], rhs[perm_[i]]);
  // L has unit diagonal
  for (std::size_t i = 1; i < n; ++i)
    rhs[i] -= kernels::zdotu(lu_.row(i), rhs.data(), i);
  for (std::size_t i = n; i-- > 0;) {
    const cd acc = kernels::zdotu(lu_.row(i) + i + 1, rhs.data() + i + 1, n - i - 1);
    rhs[i] = (rhs[i] - acc) / lu_(i, i);
  }
}

std::vector<cd> LuFactorization::solve(std::span<const cd> rhs) const {
  std::vector<cd> x(rhs.begin(), rhs.end());
  solve_in_place(x);
  return x;
}

}  // namespace qgase
