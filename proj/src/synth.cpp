#include "gw/synth.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <random>

#include "gw/rng.hpp"

namespace gw {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kSincHalfTaps = 16;  // 33-tap windowed-sinc fractional delay

double hann_window(double u, int cycles, double f) {
  // Raised-cosine window spanning the full burst: 0.5 (1 - cos(2 pi f u / cycles)).
  if (u <= 0.0 || u >= cycles / f) return 0.0;
  return 0.5 * (1.0 - std::cos(2.0 * kPi * f * u / cycles));
}

// amp * win(t - tau) * sin(2 pi f (t - tau) + phase), accumulated in place.
void add_arrival(std::vector<double>& out, double sample_rate, const ExcitationPulse& p,
                 double tau, double amp, double phase) {
  const double f = p.center_frequency;
  const double width = p.cycles / f;
  const long first = std::max<long>(0, static_cast<long>(std::floor(tau * sample_rate)));
  const long last =
      std::min<long>(static_cast<long>(out.size()) - 1,
                     static_cast<long>(std::ceil((tau + width) * sample_rate)));
  for (long i = first; i <= last; ++i) {
    const double u = i / sample_rate - tau;
    const double w = hann_window(u, p.cycles, f);
    if (w == 0.0) continue;
    out[static_cast<std::size_t>(i)] += amp * w * std::sin(2.0 * kPi * f * u + phase);
  }
}

double sinc_tap(double u) {
  const double r = std::round(u);
  if (u == r) return r == 0.0 ? 1.0 : 0.0;  // exact at integer shifts
  return std::sin(kPi * u) / (kPi * u);
}

}  // namespace

double VelocityModel::cg(double temperature) const {
  auto it = cg_at.lower_bound(temperature - 1e-9);
  if (it == cg_at.end() || std::abs(it->first - temperature) > 1e-9)
    throw Error(ErrorCode::Validation,
                "no group velocity for temperature " + std::to_string(temperature));
  return it->second;
}

Waveform hanning_pulse(const ExcitationPulse& p, std::size_t n_samples, double sample_rate) {
  Waveform w;
  w.sample_rate = sample_rate;
  w.samples.assign(n_samples, 0.0);
  add_arrival(w.samples, sample_rate, p, 0.0, p.amplitude, 0.0);
  return w;
}

Waveform propagate_path(const SensorLayout& layout, const SensorPath& path,
                        const DamageSpec& damage, const ExcitationPulse& pulse, double cg,
                        double cp, std::size_t n_samples, double sample_rate) {
  damage.validate();
  if (!(cg > 0.0) || !(cp > 0.0))
    throw Error(ErrorCode::Validation, "velocities must be positive");
  if (damage.kind != DamageKind::none && !layout.inside_plate(damage.position))
    throw Error(ErrorCode::DamageOutsidePlate,
                "damage position outside plate for path " + path.name());

  const Point tx = layout.sensor(path.tx).pos;
  const Point rx = layout.sensor(path.rx).pos;
  const double d = distance_mm(tx, rx) * 1e-3;  // m
  if (!(d > 0.0)) throw Error(ErrorCode::CoincidentSensors, "zero-length path " + path.name());

  Waveform w;
  w.sample_rate = sample_rate;
  w.samples.assign(n_samples, 0.0);
  w.path = path;
  w.temperature = 0.0;
  w.label = class_label(damage.kind);

  const double leak = damage.kind == DamageKind::notch ? damage.global_phase_leak : 0.0;
  add_arrival(w.samples, sample_rate, pulse, d / cg, pulse.amplitude / std::sqrt(d), leak);

  if (damage.kind != DamageKind::none) {
    const double scatter_len =
        (distance_mm(tx, damage.position) + distance_mm(damage.position, rx)) * 1e-3;
    add_arrival(w.samples, sample_rate, pulse, scatter_len / cg,
                pulse.amplitude * damage.scatter_amplitude / std::sqrt(scatter_len),
                damage.extra_phase);
  }
  return w;
}

Waveform temperature_shift(const Waveform& w0, double temperature, double distance_m, double cg0,
                           double cgT) {
  if (!(temperature >= 0.0 && temperature <= 100.0))
    throw Error(ErrorCode::Validation, "temperature outside [0, 100] degC");
  const double dt = distance_m / cgT - distance_m / cg0;
  const double amp = 1.0 + temperature / 3550.0;

  // Arrivals move later by dt when the plate slows down; band-limited
  // fractional delay via windowed sinc, zero-padded outside the record.
  const double delay = dt * w0.sample_rate;
  const long n0 = static_cast<long>(std::floor(delay));
  const double mu = delay - n0;
  const long n = static_cast<long>(w0.samples.size());

  Waveform out = w0;
  out.temperature = temperature;
  for (long i = 0; i < n; ++i) {
    double acc = 0.0;
    for (int j = -kSincHalfTaps; j <= kSincHalfTaps; ++j) {
      const double u = j - mu;
      const double h = sinc_tap(u);
      if (h == 0.0) continue;
      const long src = i - n0 - j;
      if (src < 0 || src >= n) continue;
      const double win = 0.5 * (1.0 + std::cos(kPi * u / (kSincHalfTaps + 0.5)));
      acc += h * win * w0.samples[static_cast<std::size_t>(src)];
    }
    out.samples[static_cast<std::size_t>(i)] = amp * acc;
  }
  return out;
}

Waveform add_noise(const Waveform& w, double snr_db, std::uint64_t seed) {
  Waveform out = w;
  out.seed = seed;
  if (std::isinf(snr_db)) return out;
  out.snr_db = snr_db;

  const std::size_t n = w.samples.size();
  std::mt19937_64 eng(seed);
  std::normal_distribution<double> gauss01(0.0, 0.1);

  std::vector<double> white(n);
  for (auto& x : white) x = gauss01(eng);

  // Voss-McCartney pink noise, 16 rows: row k refreshes every 2^k samples.
  constexpr int kRows = 16;
  std::vector<double> pink(n, 0.0);
  double rows[kRows];
  double row_sum = 0.0;
  for (int r = 0; r < kRows; ++r) {
    rows[r] = gauss01(eng);
    row_sum += rows[r];
  }
  if (n > 0) pink[0] = row_sum;
  for (std::size_t i = 1; i < n; ++i) {
    const int r = std::min(std::countr_zero(i), kRows - 1);
    row_sum -= rows[r];
    rows[r] = gauss01(eng);
    row_sum += rows[r];
    pink[i] = row_sum;
  }
  double mean = 0.0;
  for (double x : pink) mean += x;
  mean /= std::max<std::size_t>(1, n);
  double var = 0.0;
  for (double x : pink) var += (x - mean) * (x - mean);
  var /= std::max<std::size_t>(1, n);
  const double pink_scale = var > 0.0 ? 0.1 / std::sqrt(var) : 0.0;

  double p_signal = 0.0, peak = 0.0;
  for (double x : w.samples) {
    p_signal += x * x;
    peak = std::max(peak, std::abs(x));
  }
  p_signal /= std::max<std::size_t>(1, n);
  if (p_signal == 0.0 || peak == 0.0) return out;

  double p_unit = 0.0;
  std::vector<double> unit(n);
  for (std::size_t i = 0; i < n; ++i) {
    unit[i] = white[i] + pink_scale * (pink[i] - mean);
    p_unit += unit[i] * unit[i];
  }
  p_unit /= static_cast<double>(n);

  // beta makes the realized power ratio hit the requested SNR exactly:
  // SNR_dB = 10 log10(P_signal / P_noise), powers as mean squares.
  const double p_noise = p_signal * std::pow(10.0, -snr_db / 10.0);
  const double beta = std::sqrt(p_noise / p_unit) / peak;
  for (std::size_t i = 0; i < n; ++i) out.samples[i] += beta * peak * unit[i];
  return out;
}

std::size_t dataset_size(const SensorLayout& layout, std::size_t n_damages,
                         const DatasetConfig& cfg) {
  return layout.paths.size() * n_damages * cfg.temperatures.size() * cfg.snr_list.size() *
         static_cast<std::size_t>(cfg.reps);
}

void generate_dataset(const SensorLayout& layout, const std::vector<DamageSpec>& damages,
                      const DatasetConfig& cfg, const VelocityModel& vel, std::uint64_t seed,
                      std::uint64_t stage, const RecordSink& sink) {
  layout.validate();
  if (cfg.reps < 1) throw Error(ErrorCode::Validation, "reps must be >= 1");
  if (damages.empty() || cfg.temperatures.empty() || cfg.snr_list.empty())
    throw Error(ErrorCode::Validation, "dataset config has an empty axis");

  const std::size_t n_samples =
      static_cast<std::size_t>(std::llround(cfg.duration * cfg.sample_rate));
  const std::size_t np = layout.paths.size(), nd = damages.size(), nt = cfg.temperatures.size(),
                    ns = cfg.snr_list.size(), nr = static_cast<std::size_t>(cfg.reps);
  const std::size_t total = np * nd * nt * ns * nr;

#pragma omp parallel for schedule(dynamic)
  for (std::size_t idx = 0; idx < total; ++idx) {
    std::size_t rem = idx;
    const std::size_t r = rem % nr;
    rem /= nr;
    const std::size_t si = rem % ns;
    rem /= ns;
    const std::size_t ti = rem % nt;
    rem /= nt;
    const std::size_t di = rem % nd;
    const std::size_t pi = rem / nd;

    const SensorPath& path = layout.paths[pi];
    const double temp = cfg.temperatures[ti];
    const std::uint64_t rec_seed = rng::derive(seed, {stage, pi, di, ti, si, r});

    Waveform w0 = propagate_path(layout, path, damages[di], cfg.pulse, vel.cg0, vel.cp0,
                                 n_samples, cfg.sample_rate);
    const double d = layout.path_distance_mm(path) * 1e-3;
    Waveform wt = temperature_shift(w0, temp, d, vel.cg0, vel.cg(temp));
    Waveform rec = cfg.snr_list[si] ? add_noise(wt, *cfg.snr_list[si], rec_seed) : wt;
    rec.seed = rec_seed;
    sink(idx, rec);
  }
}

std::vector<Waveform> generate_dataset(const SensorLayout& layout,
                                       const std::vector<DamageSpec>& damages,
                                       const DatasetConfig& cfg, const VelocityModel& vel,
                                       std::uint64_t seed, std::uint64_t stage) {
  std::vector<Waveform> out(dataset_size(layout, damages.size(), cfg));
  generate_dataset(layout, damages, cfg, vel, seed, stage,
                   [&out](std::size_t i, const Waveform& w) { out[i] = w; });
  return out;
}

}  // namespace gw
