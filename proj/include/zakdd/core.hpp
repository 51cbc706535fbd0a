#pragma once

// Core delay-Doppler domain types: the discretization lattice, the three
// signal realizations (time / frequency / delay-Doppler), sparse channel
// descriptions and DD-domain tap filters.
//
// Conventions used throughout the library:
//   * grids are indexed [k,l] = (delay bin, Doppler bin), stored row-major
//     with the Doppler index fastest: grid[k*N + l]
//   * the linear symbol index of cell (k,l) is k*N + l
//   * all transforms are unitary-normalized, so energy is preserved exactly

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace zakdd {

using cplx = std::complex<double>;

inline constexpr double two_pi = 6.28318530717958647692528676655900577;

/// e^{+j 2 pi num/den}, with the angle reduced to a single turn first so that
/// integer-ratio phases are reproducible regardless of how large num is.
inline cplx unit_phase(long long num, long long den) {
  long long r = num % den;
  if (r < 0) r += den;
  return std::polar(1.0, two_pi * (static_cast<double>(r) / static_cast<double>(den)));
}

/// Discretization lattice: M delay bins and N Doppler bins on the fundamental
/// DD period, with delay period tau_p seconds. The Doppler period is the
/// exact reciprocal nu_p = 1/tau_p; bandwidth, duration and bin widths are
/// all derived so that B*T = M*N holds by construction.
struct FrameParams {
  int M = 1;
  int N = 1;
  double tau_p = 1.0;

  FrameParams() = default;
  FrameParams(int delay_bins, int doppler_bins, double delay_period_s)
      : M(delay_bins), N(doppler_bins), tau_p(delay_period_s) {
    if (M < 1) throw std::invalid_argument("FrameParams: M must be >= 1");
    if (N < 1) throw std::invalid_argument("FrameParams: N must be >= 1");
    if (!(tau_p > 0.0)) throw std::invalid_argument("FrameParams: tau_p must be > 0");
  }

  double nu_p() const { return 1.0 / tau_p; }
  double bandwidth() const { return static_cast<double>(M) / tau_p; }
  double duration() const { return static_cast<double>(N) * tau_p; }
  double dt() const { return tau_p / static_cast<double>(M); }
  double df() const { return 1.0 / duration(); }
  int size() const { return M * N; }

  friend bool operator==(const FrameParams& a, const FrameParams& b) {
    return a.M == b.M && a.N == b.N && a.tau_p == b.tau_p;
  }
};

namespace detail {
inline void require_same_params(const FrameParams& a, const FrameParams& b,
                                const char* what) {
  if (!(a == b))
    throw std::invalid_argument(std::string(what) + ": frame parameter mismatch");
}
}  // namespace detail

/// Complex baseband samples x[n] taken at t = n/B, n = 0..MN-1. The discrete
/// realization is MN-periodic: index arithmetic elsewhere wraps mod MN.
struct TimeSignal {
  FrameParams params;
  std::vector<cplx> samples;

  TimeSignal() = default;
  explicit TimeSignal(const FrameParams& fp)
      : params(fp), samples(static_cast<std::size_t>(fp.size())) {}
  TimeSignal(const FrameParams& fp, std::vector<cplx> s)
      : params(fp), samples(std::move(s)) {
    if (samples.size() != static_cast<std::size_t>(fp.size()))
      throw std::invalid_argument("TimeSignal: expected M*N samples");
  }
};

/// Frequency bins X[q] at f = q/T, q = 0..MN-1 (bin spacing 1/T over a total
/// bandwidth of B = MN/T).
struct FreqSignal {
  FrameParams params;
  std::vector<cplx> bins;

  FreqSignal() = default;
  explicit FreqSignal(const FrameParams& fp)
      : params(fp), bins(static_cast<std::size_t>(fp.size())) {}
  FreqSignal(const FrameParams& fp, std::vector<cplx> b)
      : params(fp), bins(std::move(b)) {
    if (bins.size() != static_cast<std::size_t>(fp.size()))
      throw std::invalid_argument("FreqSignal: expected M*N bins");
  }
};

/// Quasi-periodic DD-domain signal. Only the fundamental period
/// [0,tau_p) x [0,nu_p) is stored; values anywhere else on the lattice are
/// defined by quasi_extend() and never stored.
struct DDSignal {
  FrameParams params;
  std::vector<cplx> grid;  // [k*N + l], cell (k,l) at (k*tau_p/M, l*nu_p/N)

  DDSignal() = default;
  explicit DDSignal(const FrameParams& fp)
      : params(fp), grid(static_cast<std::size_t>(fp.size())) {}
  DDSignal(const FrameParams& fp, std::vector<cplx> g)
      : params(fp), grid(std::move(g)) {
    if (grid.size() != static_cast<std::size_t>(fp.size()))
      throw std::invalid_argument("DDSignal: expected an M x N grid");
  }

  cplx& at(int k, int l) { return grid[static_cast<std::size_t>(k) * params.N + l]; }
  const cplx& at(int k, int l) const {
    return grid[static_cast<std::size_t>(k) * params.N + l];
  }
};

/// M x N array of information symbols x[k,l] placed on the DD grid.
struct SymbolGrid {
  FrameParams params;
  std::vector<cplx> symbols;  // [k*N + l]

  SymbolGrid() = default;
  explicit SymbolGrid(const FrameParams& fp)
      : params(fp), symbols(static_cast<std::size_t>(fp.size())) {}
  SymbolGrid(const FrameParams& fp, std::vector<cplx> s)
      : params(fp), symbols(std::move(s)) {
    if (symbols.size() != static_cast<std::size_t>(fp.size()))
      throw std::invalid_argument("SymbolGrid: expected M*N symbols");
  }

  cplx& at(int k, int l) { return symbols[static_cast<std::size_t>(k) * params.N + l]; }
  const cplx& at(int k, int l) const {
    return symbols[static_cast<std::size_t>(k) * params.N + l];
  }
};

/// One propagation path of a doubly-spread channel.
struct ChannelPath {
  cplx gain{1.0, 0.0};
  double delay_s = 0.0;
  double doppler_hz = 0.0;
};

enum class ChannelMode { Cyclic, Framed };

/// Sparse spreading function: a finite list of (gain, delay, Doppler) paths.
struct ChannelSpec {
  std::vector<ChannelPath> paths;
  ChannelMode mode = ChannelMode::Cyclic;

  ChannelSpec() = default;
  ChannelSpec(std::vector<ChannelPath> p, ChannelMode m)
      : paths(std::move(p)), mode(m) {
    validate();
  }

  void validate() const {
    if (paths.empty())
      throw std::invalid_argument("ChannelSpec: needs at least one path");
    for (std::size_t i = 0; i < paths.size(); ++i)
      if (paths[i].delay_s < 0.0)
        throw std::invalid_argument("ChannelSpec: paths[" + std::to_string(i) +
                                    "].delay_s must be >= 0");
  }

  double delay_spread() const {
    auto [lo, hi] = std::minmax_element(
        paths.begin(), paths.end(),
        [](const ChannelPath& a, const ChannelPath& b) { return a.delay_s < b.delay_s; });
    return hi->delay_s - lo->delay_s;
  }

  double doppler_spread() const {
    auto [lo, hi] = std::minmax_element(
        paths.begin(), paths.end(), [](const ChannelPath& a, const ChannelPath& b) {
          return a.doppler_hz < b.doppler_hz;
        });
    return hi->doppler_hz - lo->doppler_hz;
  }
};

/// Finite set of DD taps acting by twisted convolution. Offsets are integer
/// bins on the DD lattice; they may be negative or reach outside the
/// fundamental period.
struct DDFilter {
  struct Tap {
    int k = 0;  // delay-bin offset
    int l = 0;  // Doppler-bin offset
    cplx value{0.0, 0.0};
  };

  FrameParams params;
  std::vector<Tap> taps;

  DDFilter() = default;
  explicit DDFilter(const FrameParams& fp) : params(fp) {}
  DDFilter(const FrameParams& fp, std::vector<Tap> t) : params(fp), taps(std::move(t)) {
    for (std::size_t i = 0; i < taps.size(); ++i)
      for (std::size_t j = i + 1; j < taps.size(); ++j)
        if (taps[i].k == taps[j].k && taps[i].l == taps[j].l)
          throw std::invalid_argument("DDFilter: duplicate tap at (" +
                                      std::to_string(taps[i].k) + "," +
                                      std::to_string(taps[i].l) + ")");
  }
};

struct CrystallizationReport {
  bool delay_ok = false;
  bool doppler_ok = false;
  double spread_product = 0.0;
};

/// Checks the crystallization condition: both periods must strictly exceed
/// the corresponding channel spread. Also reports the spread product, which
/// must be < 1 for any reciprocal pair of periods to exist at all.
inline CrystallizationReport validate_crystallization(const ChannelSpec& chan,
                                                      const FrameParams& fp) {
  CrystallizationReport rep;
  const double ds = chan.delay_spread();
  const double vs = chan.doppler_spread();
  rep.delay_ok = fp.tau_p > ds;
  rep.doppler_ok = fp.nu_p() > vs;
  rep.spread_product = ds * vs;
  return rep;
}

// small numeric helpers shared by the acceptance and unit suites

inline double l2_norm(const std::vector<cplx>& v) {
  double s = 0.0;
  for (const cplx& z : v) s += std::norm(z);
  return std::sqrt(s);
}

inline double max_abs(const std::vector<cplx>& v) {
  double m = 0.0;
  for (const cplx& z : v) m = std::max(m, std::abs(z));
  return m;
}

/// max-norm of (a - b) divided by max-norm of the reference b.
inline double rel_max_err(const std::vector<cplx>& a, const std::vector<cplx>& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("rel_max_err: size mismatch");
  double num = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) num = std::max(num, std::abs(a[i] - b[i]));
  const double den = max_abs(b);
  return den == 0.0 ? num : num / den;
}

}  // namespace zakdd
