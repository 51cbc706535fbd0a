#pragma once

// Doubly-spread channel acting on sampled TD signals.
//
// Two modes:
//   Cyclic — path delays must be integer multiples of 1/B and Dopplers
//     integer multiples of 1/T; delays act as cyclic shifts of the
//     MN-periodic discrete realization and the modulation stays MN-periodic.
//     This is the exact-algebra mode used by the oracle-equivalence tests.
//   Framed — the frame is a finite window of MN samples; fractional delays
//     are realized by band-limited periodic (Dirichlet) interpolation, the
//     only interpolant consistent with the bandwidth B already imposed by
//     sampling, and fractional Dopplers are evaluated exactly at the sample
//     times. Used for reproductions with physical channel numbers.

#include <array>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "zakdd/core.hpp"
#include "zakdd/fft.hpp"

namespace zakdd {

struct OnGridPath {
  int delay_bins = 0;
  int doppler_bins = 0;
  cplx gain{0.0, 0.0};
};

/// Converts paths to integer (delay, Doppler) bins, rejecting any path that
/// is off the lattice by more than 1e-9 of a bin.
inline std::vector<OnGridPath> to_on_grid(const ChannelSpec& chan, const FrameParams& fp) {
  std::vector<OnGridPath> out;
  out.reserve(chan.paths.size());
  for (std::size_t i = 0; i < chan.paths.size(); ++i) {
    const ChannelPath& p = chan.paths[i];
    const double d = p.delay_s * fp.bandwidth();
    const double l = p.doppler_hz * fp.duration();
    const double dr = std::round(d), lr = std::round(l);
    if (std::abs(d - dr) > 1e-9)
      throw std::invalid_argument("channel: paths[" + std::to_string(i) +
                                  "].delay_s = " + std::to_string(p.delay_s) +
                                  " is not an integer multiple of 1/B");
    if (std::abs(l - lr) > 1e-9)
      throw std::invalid_argument("channel: paths[" + std::to_string(i) +
                                  "].doppler_hz = " + std::to_string(p.doppler_hz) +
                                  " is not an integer multiple of 1/T");
    out.push_back({static_cast<int>(dr), static_cast<int>(lr), p.gain});
  }
  return out;
}

namespace detail {

// Band-limited periodic fractional delay by d samples (Dirichlet kernel),
// implemented as a frequency-domain phase ramp with the real-symmetric
// treatment of the Nyquist bin for even lengths.
inline std::vector<cplx> fractional_delay(const std::vector<cplx>& x, double d) {
  const std::size_t n = x.size();
  if (n == 1) return x;
  std::vector<cplx> X = fft_forward(x);
  for (std::size_t q = 0; q < n; ++q) {
    const bool nyquist = (n % 2 == 0) && (q == n / 2);
    if (nyquist) {
      X[q] *= std::cos(two_pi * 0.5 * d);  // split +-Nyquist: cos(pi d)
      continue;
    }
    const double qs = (q <= n / 2) ? static_cast<double>(q)
                                   : static_cast<double>(q) - static_cast<double>(n);
    X[q] *= std::polar(1.0, -two_pi * qs * d / static_cast<double>(n));
  }
  std::vector<cplx> y = fft_inverse(X);
  const double s = 1.0 / static_cast<double>(n);
  for (cplx& z : y) z *= s;
  return y;
}

}  // namespace detail

/// Applies the channel: y(t) = sum_i h_i x(t - tau_i) e^{j2pi nu_i (t - tau_i)}
/// evaluated at the sample times t = n/B of the MN-sample frame.
inline TimeSignal apply_channel(const ChannelSpec& chan, const TimeSignal& x) {
  const FrameParams& fp = x.params;
  const int MN = fp.size();
  TimeSignal y(fp);

  if (chan.mode == ChannelMode::Cyclic) {
    const std::vector<OnGridPath> paths = to_on_grid(chan, fp);
    for (const OnGridPath& p : paths) {
      for (int n = 0; n < MN; ++n) {
        long long src = (static_cast<long long>(n) - p.delay_bins) % MN;
        if (src < 0) src += MN;
        y.samples[n] += p.gain * x.samples[static_cast<std::size_t>(src)] *
                        unit_phase(static_cast<long long>(p.doppler_bins) *
                                       (static_cast<long long>(n) - p.delay_bins),
                                   MN);
      }
    }
    return y;
  }

  const double B = fp.bandwidth();
  for (const ChannelPath& p : chan.paths) {
    const std::vector<cplx> shifted = detail::fractional_delay(x.samples, p.delay_s * B);
    for (int n = 0; n < MN; ++n) {
      const double t = static_cast<double>(n) / B;
      y.samples[n] += p.gain * shifted[n] *
                      std::polar(1.0, two_pi * p.doppler_hz * (t - p.delay_s));
    }
  }
  return y;
}

/// The four-path doubly-spread example channel: delays (2, 2, 3, 4) us and
/// Dopplers (0, -950, 0, +750) Hz, with caller-chosen gains. Delay spread
/// 2 us, Doppler spread 1700 Hz, spread product 3.4e-3.
inline ChannelSpec fig7_channel(const std::array<cplx, 4>& gains,
                                ChannelMode mode = ChannelMode::Framed) {
  std::vector<ChannelPath> paths{
      {gains[0], 2e-6, 0.0},
      {gains[1], 2e-6, -950.0},
      {gains[2], 3e-6, 0.0},
      {gains[3], 4e-6, 750.0},
  };
  return ChannelSpec(std::move(paths), mode);
}

/// Adds iid circularly-symmetric complex Gaussian noise of the given
/// per-sample power. Deterministic for a fixed seed; the generator is owned
/// by the call.
inline TimeSignal add_awgn(const TimeSignal& x, double noise_power, std::uint64_t seed) {
  if (noise_power < 0.0)
    throw std::invalid_argument("add_awgn: noise_power must be >= 0");
  TimeSignal y = x;
  if (noise_power == 0.0) return y;
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, std::sqrt(noise_power / 2.0));
  for (cplx& z : y.samples) z += cplx{gauss(rng), gauss(rng)};
  return y;
}

}  // namespace zakdd
