#pragma once

// Direct-sum reference implementations of the Zak-domain transforms. These
// evaluate the defining sums term by term with freshly computed phases and
// deliberately share no code with the FFT fast paths in zakdd/zak.hpp; the
// test suites and `selftest` use them as the oracle for the fast versions.

#include <cmath>
#include <vector>

#include "zakdd/core.hpp"

namespace zakdd::reference {

inline DDSignal dzt(const TimeSignal& x) {
  const int M = x.params.M, N = x.params.N;
  DDSignal out(x.params);
  const double s = 1.0 / std::sqrt(static_cast<double>(N));
  for (int k = 0; k < M; ++k)
    for (int l = 0; l < N; ++l) {
      cplx acc{0.0, 0.0};
      for (int n = 0; n < N; ++n)
        acc += x.samples[static_cast<std::size_t>(k) + static_cast<std::size_t>(n) * M] *
               std::polar(1.0, -two_pi * double(n) * double(l) / double(N));
      out.grid[static_cast<std::size_t>(k) * N + l] = acc * s;
    }
  return out;
}

inline TimeSignal idzt(const DDSignal& X) {
  const int M = X.params.M, N = X.params.N;
  TimeSignal out(X.params);
  const double s = 1.0 / std::sqrt(static_cast<double>(N));
  for (int k = 0; k < M; ++k)
    for (int n = 0; n < N; ++n) {
      cplx acc{0.0, 0.0};
      for (int l = 0; l < N; ++l)
        acc += X.grid[static_cast<std::size_t>(k) * N + l] *
               std::polar(1.0, two_pi * double(n) * double(l) / double(N));
      out.samples[static_cast<std::size_t>(k) + static_cast<std::size_t>(n) * M] = acc * s;
    }
  return out;
}

inline FreqSignal freq_realize(const DDSignal& X) {
  const int M = X.params.M, N = X.params.N;
  const int MN = M * N;
  FreqSignal out(X.params);
  const double s = 1.0 / std::sqrt(static_cast<double>(M));
  for (int q = 0; q < MN; ++q) {
    cplx acc{0.0, 0.0};
    for (int k = 0; k < M; ++k)
      acc += X.grid[static_cast<std::size_t>(k) * N + (q % N)] *
             std::polar(1.0, -two_pi * double(q) * double(k) / double(MN));
    out.bins[q] = acc * s;
  }
  return out;
}

inline DDSignal freq_invert(const FreqSignal& Xf) {
  const int M = Xf.params.M, N = Xf.params.N;
  const int MN = M * N;
  DDSignal out(Xf.params);
  const double s = 1.0 / std::sqrt(static_cast<double>(M));
  for (int k = 0; k < M; ++k)
    for (int l = 0; l < N; ++l) {
      cplx acc{0.0, 0.0};
      for (int m = 0; m < M; ++m)
        acc += Xf.bins[static_cast<std::size_t>(l) + static_cast<std::size_t>(m) * N] *
               std::polar(1.0, two_pi * double(l + m * N) * double(k) / double(MN));
      out.grid[static_cast<std::size_t>(k) * N + l] = acc * s;
    }
  return out;
}

/// O(n^2) unitary DFT, the oracle for the Fourier-as-composition identity.
inline std::vector<cplx> dft_unitary(const std::vector<cplx>& x) {
  const std::size_t n = x.size();
  std::vector<cplx> out(n);
  const double s = 1.0 / std::sqrt(static_cast<double>(n));
  for (std::size_t q = 0; q < n; ++q) {
    cplx acc{0.0, 0.0};
    for (std::size_t m = 0; m < n; ++m)
      acc += x[m] * std::polar(1.0, -two_pi * double(q) * double(m) / double(n));
    out[q] = acc * s;
  }
  return out;
}

inline std::vector<cplx> idft_unitary(const std::vector<cplx>& x) {
  const std::size_t n = x.size();
  std::vector<cplx> out(n);
  const double s = 1.0 / std::sqrt(static_cast<double>(n));
  for (std::size_t q = 0; q < n; ++q) {
    cplx acc{0.0, 0.0};
    for (std::size_t m = 0; m < n; ++m)
      acc += x[m] * std::polar(1.0, two_pi * double(q) * double(m) / double(n));
    out[q] = acc * s;
  }
  return out;
}

}  // namespace zakdd::reference
