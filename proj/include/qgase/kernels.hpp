#pragma once

#include <complex>
#include <cstddef>

// Arithmetic kernels behind the dense complex solver. Each kernel has a
// scalar reference implementation and (on x86-64) an AVX2/FMA variant;
// the active variant is chosen at runtime from CPU capabilities and can
// be overridden with set_backend() or the QGASE_SIMD environment
// variable ("scalar" or "avx2").

namespace qgase::kernels {

using cd = std::complex<double>;

enum class Backend { scalar, avx2 };

const char* to_string(Backend b);
bool backend_supported(Backend b);
Backend active_backend();

/// Throws std::invalid_argument if the backend is not supported on this host.
void set_backend(Backend b);

/// y[i] += a * x[i] for i in [0, n)
void zaxpy(cd* y, const cd* x, cd a, std::size_t n);

/// sum_i x[i] * y[i]  (unconjugated)
cd zdotu(const cd* x, const cd* y, std::size_t n);

namespace detail {
void zaxpy_scalar(cd* y, const cd* x, cd a, std::size_t n);
cd zdotu_scalar(const cd* x, const cd* y, std::size_t n);
#if defined(__x86_64__) || defined(_M_X64)
void zaxpy_avx2(cd* y, const cd* x, cd a, std::size_t n);
cd zdotu_avx2(const cd* x, const cd* y, std::size_t n);
#endif
}  // namespace detail

}  // namespace qgase::kernels
