#pragma once

// Self-contained complex FFT used by the fast transform paths: iterative
// radix-2 for power-of-two lengths, Bluestein's chirp-z algorithm otherwise.
// All entry points are unnormalized; callers apply their own scaling.

#include <cstddef>
#include <vector>

#include "zakdd/core.hpp"

namespace zakdd {

namespace detail {

inline bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

inline std::size_t next_pow2(std::size_t n) {
  std::size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

// In-place iterative Cooley-Tukey, n a power of two.
// sign = -1 forward (e^{-j2pi nk/N}), +1 inverse (unnormalized).
inline void fft_pow2_inplace(std::vector<cplx>& a, int sign) {
  const std::size_t n = a.size();
  if (n < 2) return;
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const double ang = sign * two_pi / static_cast<double>(len);
    const cplx wlen = std::polar(1.0, ang);
    for (std::size_t i = 0; i < n; i += len) {
      cplx w{1.0, 0.0};
      for (std::size_t j = 0; j < len / 2; ++j) {
        const cplx u = a[i + j];
        const cplx v = a[i + j + len / 2] * w;
        a[i + j] = u + v;
        a[i + j + len / 2] = u - v;
        w *= wlen;
      }
    }
  }
}

// Arbitrary-length DFT via Bluestein: x[k] -> sum_n x[n] e^{sign j2pi nk/N}.
inline std::vector<cplx> fft_bluestein(const std::vector<cplx>& x, int sign) {
  const std::size_t n = x.size();
  const std::size_t m = next_pow2(2 * n - 1);
  // chirp c[k] = e^{sign j pi k^2 / n}; exponent reduced mod 2n exactly.
  std::vector<cplx> chirp(n);
  for (std::size_t k = 0; k < n; ++k) {
    const long long e = static_cast<long long>(k) * static_cast<long long>(k);
    chirp[k] = unit_phase(sign * e, 2 * static_cast<long long>(n));
  }
  std::vector<cplx> a(m, cplx{0.0, 0.0}), b(m, cplx{0.0, 0.0});
  for (std::size_t k = 0; k < n; ++k) a[k] = x[k] * chirp[k];
  for (std::size_t k = 0; k < n; ++k) {
    b[k] = std::conj(chirp[k]);
    if (k != 0) b[m - k] = b[k];
  }
  fft_pow2_inplace(a, -1);
  fft_pow2_inplace(b, -1);
  for (std::size_t k = 0; k < m; ++k) a[k] *= b[k];
  fft_pow2_inplace(a, +1);
  std::vector<cplx> out(n);
  const double inv_m = 1.0 / static_cast<double>(m);
  for (std::size_t k = 0; k < n; ++k) out[k] = a[k] * inv_m * chirp[k];
  return out;
}

}  // namespace detail

/// Unnormalized forward DFT: X[k] = sum_n x[n] e^{-j2pi nk/N}.
inline std::vector<cplx> fft_forward(std::vector<cplx> x) {
  if (x.size() < 2) return x;
  if (detail::is_pow2(x.size())) {
    detail::fft_pow2_inplace(x, -1);
    return x;
  }
  return detail::fft_bluestein(x, -1);
}

/// Unnormalized inverse DFT: x[n] = sum_k X[k] e^{+j2pi nk/N} (no 1/N).
inline std::vector<cplx> fft_inverse(std::vector<cplx> x) {
  if (x.size() < 2) return x;
  if (detail::is_pow2(x.size())) {
    detail::fft_pow2_inplace(x, +1);
    return x;
  }
  return detail::fft_bluestein(x, +1);
}

/// Unitary DFT (1/sqrt(N) scaling).
inline std::vector<cplx> dft_unitary(const std::vector<cplx>& x) {
  std::vector<cplx> out = fft_forward(x);
  const double s = 1.0 / std::sqrt(static_cast<double>(x.size()));
  for (cplx& z : out) z *= s;
  return out;
}

/// Unitary inverse DFT.
inline std::vector<cplx> idft_unitary(const std::vector<cplx>& x) {
  std::vector<cplx> out = fft_inverse(x);
  const double s = 1.0 / std::sqrt(static_cast<double>(x.size()));
  for (cplx& z : out) z *= s;
  return out;
}

}  // namespace zakdd
