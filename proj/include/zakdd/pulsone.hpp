#pragma once

// Pulsones: the TD/FD realizations of single DD-domain pulses. A DD pulse at
// (k0, l0) realizes in time as a pulse train with period tau_p (M samples)
// modulated by the tone of frequency l0*nu_p/N, and in frequency as a pulse
// train with spacing nu_p (N bins) modulated by the FD tone set by k0.

#include <stdexcept>
#include <string>
#include <vector>

#include "zakdd/core.hpp"
#include "zakdd/zak.hpp"

namespace zakdd {

/// Unit-energy DD pulse: delta at cell (k0, l0) of the fundamental period.
inline DDSignal dd_pulse(const FrameParams& fp, int k0, int l0) {
  if (k0 < 0 || k0 >= fp.M)
    throw std::out_of_range("dd_pulse: k0=" + std::to_string(k0) +
                            " outside [0," + std::to_string(fp.M) + ")");
  if (l0 < 0 || l0 >= fp.N)
    throw std::out_of_range("dd_pulse: l0=" + std::to_string(l0) +
                            " outside [0," + std::to_string(fp.N) + ")");
  DDSignal out(fp);
  out.at(k0, l0) = cplx{1.0, 0.0};
  return out;
}

/// TD pulsone. Closed form: samples[k0 + nM] = (1/sqrt(N)) e^{j2pi n l0/N},
/// all other samples zero.
inline TimeSignal pulsone_td(const FrameParams& fp, int k0, int l0) {
  return idzt(dd_pulse(fp, k0, l0));
}

/// FD pulsone. Closed form: bins[l0 + mN] = (1/sqrt(M)) e^{-j2pi (l0+mN) k0/(MN)},
/// all other bins zero.
inline FreqSignal pulsone_fd(const FrameParams& fp, int k0, int l0) {
  return freq_realize(dd_pulse(fp, k0, l0));
}

/// Gram matrix of all MN TD pulsones, entry [(k,l),(k',l')] = <p_kl, p_k'l'>
/// with <u,v> = sum conj(u) v. Rows/columns in linear cell order k*N + l.
/// Discrete pulsones on the information grid are exactly orthonormal, so the
/// result is the MN x MN identity: there are exactly MN = BT carriers.
inline std::vector<cplx> pulsone_gram(const FrameParams& fp) {
  const int MN = fp.size();
  std::vector<TimeSignal> p;
  p.reserve(static_cast<std::size_t>(MN));
  for (int k = 0; k < fp.M; ++k)
    for (int l = 0; l < fp.N; ++l) p.push_back(pulsone_td(fp, k, l));
  std::vector<cplx> gram(static_cast<std::size_t>(MN) * MN);
  for (int a = 0; a < MN; ++a)
    for (int b = 0; b < MN; ++b) {
      cplx acc{0.0, 0.0};
      for (int n = 0; n < MN; ++n)
        acc += std::conj(p[a].samples[n]) * p[b].samples[n];
      gram[static_cast<std::size_t>(a) * MN + b] = acc;
    }
  return gram;
}

}  // namespace zakdd
