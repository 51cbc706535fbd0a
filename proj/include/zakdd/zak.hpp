#pragma once

// Discrete Zak transform and its inverses between the TD, FD and DD
// representations, plus the quasi-periodic extension of stored DD grids.
//
// The fast paths below run length-N (or length-M) FFTs per lattice row,
// O(MN log N) total. Direct-sum reference implementations of the same maps
// live in zakdd/reference.hpp and serve as the in-repo oracle.

#include <cmath>
#include <vector>

#include "zakdd/core.hpp"
#include "zakdd/fft.hpp"

namespace zakdd {

/// Time Zak transform of a sampled TD signal:
///   grid[k,l] = (1/sqrt(N)) sum_n samples[k + nM] e^{-j2pi nl/N}.
/// Unitary: ||grid|| = ||samples||.
inline DDSignal dzt(const TimeSignal& x) {
  const int M = x.params.M, N = x.params.N;
  DDSignal out(x.params);
  const double s = 1.0 / std::sqrt(static_cast<double>(N));
  std::vector<cplx> row(static_cast<std::size_t>(N));
  for (int k = 0; k < M; ++k) {
    for (int n = 0; n < N; ++n) row[n] = x.samples[static_cast<std::size_t>(k) + static_cast<std::size_t>(n) * M];
    std::vector<cplx> R = fft_forward(row);
    for (int l = 0; l < N; ++l) out.grid[static_cast<std::size_t>(k) * N + l] = R[l] * s;
  }
  return out;
}

/// Inverse time Zak transform:
///   samples[k + nM] = (1/sqrt(N)) sum_l grid[k,l] e^{+j2pi nl/N}.
inline TimeSignal idzt(const DDSignal& X) {
  const int M = X.params.M, N = X.params.N;
  TimeSignal out(X.params);
  const double s = 1.0 / std::sqrt(static_cast<double>(N));
  std::vector<cplx> row(static_cast<std::size_t>(N));
  for (int k = 0; k < M; ++k) {
    for (int l = 0; l < N; ++l) row[l] = X.grid[static_cast<std::size_t>(k) * N + l];
    std::vector<cplx> R = fft_inverse(row);
    for (int n = 0; n < N; ++n) out.samples[static_cast<std::size_t>(k) + static_cast<std::size_t>(n) * M] = R[n] * s;
  }
  return out;
}

/// Inverse frequency Zak transform (DD -> FD):
///   bins[q] = (1/sqrt(M)) sum_k grid[k, q mod N] e^{-j2pi qk/(MN)},
/// the quasi-periodic extension supplying the Doppler row q mod N.
inline FreqSignal freq_realize(const DDSignal& X) {
  const int M = X.params.M, N = X.params.N;
  const long long MN = static_cast<long long>(M) * N;
  FreqSignal out(X.params);
  const double s = 1.0 / std::sqrt(static_cast<double>(M));
  std::vector<cplx> col(static_cast<std::size_t>(M));
  for (int l = 0; l < N; ++l) {
    // bins[l + mN] = (1/sqrt(M)) sum_k [grid[k,l] e^{-j2pi lk/(MN)}] e^{-j2pi mk/M}
    for (int k = 0; k < M; ++k)
      col[k] = X.grid[static_cast<std::size_t>(k) * N + l] *
               unit_phase(-static_cast<long long>(l) * k, MN);
    std::vector<cplx> C = fft_forward(col);
    for (int m = 0; m < M; ++m) out.bins[static_cast<std::size_t>(l) + static_cast<std::size_t>(m) * N] = C[m] * s;
  }
  return out;
}

/// Frequency Zak transform (FD -> DD), the exact unitary inverse of
/// freq_realize:
///   grid[k,l] = (1/sqrt(M)) sum_m bins[l + mN] e^{+j2pi (l+mN)k/(MN)}.
inline DDSignal freq_invert(const FreqSignal& Xf) {
  const int M = Xf.params.M, N = Xf.params.N;
  const long long MN = static_cast<long long>(M) * N;
  DDSignal out(Xf.params);
  const double s = 1.0 / std::sqrt(static_cast<double>(M));
  std::vector<cplx> col(static_cast<std::size_t>(M));
  for (int l = 0; l < N; ++l) {
    for (int m = 0; m < M; ++m) col[m] = Xf.bins[static_cast<std::size_t>(l) + static_cast<std::size_t>(m) * N];
    std::vector<cplx> C = fft_inverse(col);
    for (int k = 0; k < M; ++k)
      out.grid[static_cast<std::size_t>(k) * N + l] =
          C[k] * s * unit_phase(static_cast<long long>(l) * k, MN);
  }
  return out;
}

/// Quasi-periodic extension of a stored DD grid to any integer lattice point:
/// with k = k0 + nM and l = l0 + mN (k0 in [0,M), l0 in [0,N)),
///   value = e^{+j2pi n l0/N} grid[k0,l0].
/// Doppler-period wraps carry no phase; each delay-period wrap multiplies by
/// the tone e^{j2pi l0/N} determined by the stored cell's Doppler index.
inline cplx quasi_extend(const DDSignal& X, long long k, long long l) {
  const int M = X.params.M, N = X.params.N;
  long long k0 = k % M;
  if (k0 < 0) k0 += M;
  const long long n = (k - k0) / M;
  long long l0 = l % N;
  if (l0 < 0) l0 += N;
  const cplx v = X.grid[static_cast<std::size_t>(k0) * N + static_cast<std::size_t>(l0)];
  if (n == 0) return v;
  return unit_phase(n * l0, N) * v;
}

}  // namespace zakdd
