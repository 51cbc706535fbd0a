#pragma once

// Discrete twisted convolution on quasi-periodic DD signals and composition
// of DD tap filters. Twisted convolution is associative but not commutative;
// the extra phase relative to plain convolution is e^{j2pi nu'(tau - tau')},
// which on the lattice becomes e^{j2pi l'(k - k')/(MN)}.

#include <map>
#include <utility>
#include <vector>

#include "zakdd/channel.hpp"
#include "zakdd/core.hpp"
#include "zakdd/zak.hpp"

namespace zakdd {

/// (a *sigma X)[k',l'] = sum_taps a[k,l] X_ext[k'-k, l'-l] e^{j2pi (k'-k) l/(MN)}
/// where X_ext is the quasi-periodic extension of the stored grid. The output
/// is again quasi-periodic and only its fundamental period is returned.
inline DDSignal twisted_conv(const DDFilter& a, const DDSignal& X) {
  detail::require_same_params(a.params, X.params, "twisted_conv");
  const int M = X.params.M, N = X.params.N;
  const long long MN = static_cast<long long>(M) * N;
  DDSignal out(X.params);
  for (int kp = 0; kp < M; ++kp)
    for (int lp = 0; lp < N; ++lp) {
      cplx acc{0.0, 0.0};
      for (const DDFilter::Tap& t : a.taps)
        acc += t.value * quasi_extend(X, kp - t.k, lp - t.l) *
               unit_phase(static_cast<long long>(kp - t.k) * t.l, MN);
      out.grid[static_cast<std::size_t>(kp) * N + lp] = acc;
    }
  return out;
}

/// Twisted composition of two tap filters:
///   (a *sigma b)[k,l] = sum a[k',l'] b[k-k', l-l'] e^{j2pi l'(k-k')/(MN)}.
/// Tap offsets add; coincident offsets accumulate into a single tap.
inline DDFilter twisted_compose(const DDFilter& a, const DDFilter& b) {
  detail::require_same_params(a.params, b.params, "twisted_compose");
  const long long MN = static_cast<long long>(a.params.M) * a.params.N;
  std::map<std::pair<int, int>, cplx> acc;
  for (const DDFilter::Tap& ta : a.taps)
    for (const DDFilter::Tap& tb : b.taps)
      acc[{ta.k + tb.k, ta.l + tb.l}] +=
          ta.value * tb.value * unit_phase(static_cast<long long>(ta.l) * tb.k, MN);
  DDFilter out(a.params);
  out.taps.reserve(acc.size());
  for (const auto& [kl, v] : acc) out.taps.push_back({kl.first, kl.second, v});
  return out;
}

/// Identity element of twisted convolution: a single unit tap at (0,0).
inline DDFilter delta_dd_filter(const FrameParams& fp) {
  DDFilter f(fp);
  f.taps.push_back({0, 0, cplx{1.0, 0.0}});
  return f;
}

/// On-grid channel as a DD tap filter: path (h, d/B, l/T) becomes the tap of
/// value exactly h at offset (d, l).
///
/// Why no extra phase attaches to h: the cyclic TD action of one path is
///   y[n] = h x[(n-d) mod MN] e^{j2pi l (n-d)/(MN)},
/// i.e. the modulating tone is referenced to the path's own delay. Writing
/// n = k' + n'M and expanding the DZT sum of y,
///   Y[k',l'] = (1/sqrt(N)) sum_n' y[k'+n'M] e^{-j2pi n'l'/N}
///            = h e^{j2pi l(k'-d)/(MN)} X_ext[k'-d, l'-l],
/// because e^{j2pi l(k'+n'M-d)/(MN)} splits into e^{j2pi l(k'-d)/(MN)} times
/// e^{j2pi l n'/N}, and the latter retags the Doppler row of the sum. The
/// right-hand side is precisely the single-tap twisted convolution with tap
/// value h at (d, l) — the tap phase e^{j2pi (k'-d) l/(MN)} already accounts
/// for everything. (Had the tone been referenced to t = 0 instead, the tap
/// value would pick up e^{-j2pi l d/(MN)}.)
inline DDFilter channel_dd_taps(const ChannelSpec& chan, const FrameParams& fp) {
  const std::vector<OnGridPath> paths = to_on_grid(chan, fp);
  std::map<std::pair<int, int>, cplx> acc;
  for (const OnGridPath& p : paths) acc[{p.delay_bins, p.doppler_bins}] += p.gain;
  DDFilter out(fp);
  out.taps.reserve(acc.size());
  for (const auto& [kl, v] : acc) out.taps.push_back({kl.first, kl.second, v});
  return out;
}

/// Effective DD channel filter h_dd = w_rx *sigma chan *sigma w_tx for an
/// on-grid cyclic channel. Applying it by twisted convolution reproduces the
/// full pipeline dzt(apply_channel(chan, idzt(.))) exactly.
inline DDFilter effective_dd_filter(const ChannelSpec& chan, const DDFilter& w_tx,
                                    const DDFilter& w_rx) {
  detail::require_same_params(w_tx.params, w_rx.params, "effective_dd_filter");
  const DDFilter h = channel_dd_taps(chan, w_tx.params);
  return twisted_compose(w_rx, twisted_compose(h, w_tx));
}

}  // namespace zakdd
