// AVX2/FMA kernel variants. This translation unit is compiled with
// -mavx2 -mfma; callers must check CPU support before dispatching here.

#include "qgase/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

namespace qgase::kernels::detail {

// Complex multiply with interleaved [re,im] lanes:
//   (ar + i*ai) * (xr + i*xi) = (ar*xr - ai*xi) + i*(ar*xi + ai*xr)
// fmaddsub subtracts in even (re) lanes and adds in odd (im) lanes.
void zaxpy_avx2(cd* y, const cd* x, cd a, std::size_t n) {
  double* yd = reinterpret_cast<double*>(y);
  const double* xd = reinterpret_cast<const double*>(x);
  const __m256d ar = _mm256_set1_pd(a.real());
  const __m256d ai = _mm256_set1_pd(a.imag());
  const std::size_t nd = 2 * n;
  std::size_t i = 0;
  for (; i + 8 <= nd; i += 8) {
    __m256d x0 = _mm256_loadu_pd(xd + i);
    __m256d x1 = _mm256_loadu_pd(xd + i + 4);
    __m256d s0 = _mm256_permute_pd(x0, 0x5);
    __m256d s1 = _mm256_permute_pd(x1, 0x5);
    __m256d p0 = _mm256_fmaddsub_pd(ar, x0, _mm256_mul_pd(ai, s0));
    __m256d p1 = _mm256_fmaddsub_pd(ar, x1, _mm256_mul_pd(ai, s1));
    _mm256_storeu_pd(yd + i, _mm256_add_pd(_mm256_loadu_pd(yd + i), p0));
    _mm256_storeu_pd(yd + i + 4, _mm256_add_pd(_mm256_loadu_pd(yd + i + 4), p1));
  }
  for (; i + 4 <= nd; i += 4) {
    __m256d xv = _mm256_loadu_pd(xd + i);
    __m256d sv = _mm256_permute_pd(xv, 0x5);
    __m256d pv = _mm256_fmaddsub_pd(ar, xv, _mm256_mul_pd(ai, sv));
    _mm256_storeu_pd(yd + i, _mm256_add_pd(_mm256_loadu_pd(yd + i), pv));
  }
  if (i < nd) {
    const double xr = xd[i], xi = xd[i + 1];
    yd[i] += a.real() * xr - a.imag() * xi;
    yd[i + 1] += a.real() * xi + a.imag() * xr;
  }
}

cd zdotu_avx2(const cd* x, const cd* y, std::size_t n) {
  const double* xd = reinterpret_cast<const double*>(x);
  const double* yd = reinterpret_cast<const double*>(y);
  // acc1 lanes: [xr*yr, xi*yi, ...]; acc2 lanes: [xi*yr, xr*yi, ...]
  __m256d acc1 = _mm256_setzero_pd();
  __m256d acc2 = _mm256_setzero_pd();
  const std::size_t nd = 2 * n;
  std::size_t i = 0;
  for (; i + 4 <= nd; i += 4) {
    __m256d xv = _mm256_loadu_pd(xd + i);
    __m256d yv = _mm256_loadu_pd(yd + i);
    __m256d sv = _mm256_permute_pd(xv, 0x5);
    acc1 = _mm256_fmadd_pd(xv, yv, acc1);
    acc2 = _mm256_fmadd_pd(sv, yv, acc2);
  }
  alignas(32) double a1[4], a2[4];
  _mm256_store_pd(a1, acc1);
  _mm256_store_pd(a2, acc2);
  double re = (a1[0] - a1[1]) + (a1[2] - a1[3]);
  double im = (a2[0] + a2[1]) + (a2[2] + a2[3]);
  if (i < nd) {
    const double xr = xd[i], xi = xd[i + 1];
    const double yr = yd[i], yi = yd[i + 1];
    re += xr * yr - xi * yi;
    im += xr * yi + xi * yr;
  }
  return {re, im};
}

}  // namespace qgase::kernels::detail

#endif  // x86-64
