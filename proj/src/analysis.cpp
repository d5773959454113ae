#include "gw/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "gw/fft.hpp"

namespace gw {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kMorletOmega0 = 6.0;

std::size_t argmax_earliest(const std::vector<double>& v) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < v.size(); ++i)
    if (v[i] > v[best]) best = i;
  return best;
}

}  // namespace

Envelope morlet_envelope(const Waveform& w, double f0) {
  if (!(f0 > 0.0 && f0 < 0.5 * w.sample_rate))
    throw Error(ErrorCode::Validation, "f0 must lie in (0, fs/2)");
  const std::size_t n = w.samples.size();
  Envelope env;
  env.times.resize(n);
  env.magnitude.assign(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) env.times[i] = i / w.sample_rate;
  if (n == 0) return env;

  // Single-scale analytic Morlet: scale so the atom's passband centers on f0;
  // only positive frequencies kept, so |W| is an envelope.
  const double scale = kMorletOmega0 / (2.0 * kPi * f0);
  auto spec = fftu::fft_real(w.samples);
  const std::size_t half = n / 2;
  for (std::size_t k = 0; k < n; ++k) {
    if (k > half) {
      spec[k] = 0.0;
      continue;
    }
    const double omega = 2.0 * kPi * k * w.sample_rate / n;
    const double arg = scale * omega - kMorletOmega0;
    spec[k] *= std::sqrt(scale) * std::pow(kPi, -0.25) * std::exp(-0.5 * arg * arg);
  }
  const auto cwt = fftu::ifft(spec);
  for (std::size_t i = 0; i < n; ++i) env.magnitude[i] = std::abs(cwt[i]);
  return env;
}

double time_of_flight(const Envelope& tx_env, const Envelope& rx_env) {
  if (tx_env.times.size() != rx_env.times.size() || tx_env.times.empty())
    throw Error(ErrorCode::Validation, "envelopes must share a sample grid");
  auto degenerate = [](const Envelope& e) {
    return std::all_of(e.magnitude.begin(), e.magnitude.end(), [](double x) { return x == 0.0; });
  };
  if (degenerate(tx_env) || degenerate(rx_env))
    throw Error(ErrorCode::DegenerateEnvelope, "all-zero envelope");
  const std::size_t i_tx = argmax_earliest(tx_env.magnitude);
  const std::size_t i_rx = argmax_earliest(rx_env.magnitude);
  return rx_env.times[i_rx] - tx_env.times[i_tx];
}

Waveform moving_average(const Waveform& w, int kernel) {
  if (kernel < 1 || kernel % 2 == 0)
    throw Error(ErrorCode::Validation, "moving average kernel must be odd and >= 1");
  Waveform out = w;
  const long n = static_cast<long>(w.samples.size());
  const long r = kernel / 2;
  for (long i = 0; i < n; ++i) {
    const long lo = std::max<long>(0, i - r);
    const long hi = std::min<long>(n - 1, i + r);
    double acc = 0.0;
    for (long j = lo; j <= hi; ++j) acc += w.samples[static_cast<std::size_t>(j)];
    out.samples[static_cast<std::size_t>(i)] = acc / static_cast<double>(hi - lo + 1);
  }
  return out;
}

double estimate_group_velocity(const SensorLayout& layout, const SensorPath& path,
                               const Waveform& w_tx, const Waveform& w_rx, double f0) {
  const double d = layout.path_distance_mm(path) * 1e-3;
  const double tof = time_of_flight(morlet_envelope(w_tx, f0), morlet_envelope(w_rx, f0));
  if (!(tof > 0.0))
    throw Error(ErrorCode::DegenerateEnvelope, "nonpositive time of flight on " + path.name());
  return d / tof;
}

}  // namespace gw
