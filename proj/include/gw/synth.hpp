#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "gw/types.hpp"

namespace gw {

// S0 group/phase velocities used by the synthesizer: the 0 degC reference pair
// plus the group velocity at each simulated temperature.
struct VelocityModel {
  double cg0 = 0.0;  // m/s at the 0 degC reference
  double cp0 = 0.0;  // m/s at the 0 degC reference
  std::map<double, double> cg_at;  // degC -> m/s

  double cg(double temperature) const;
};

Waveform hanning_pulse(const ExcitationPulse& p, std::size_t n_samples, double sample_rate);

Waveform propagate_path(const SensorLayout& layout, const SensorPath& path,
                        const DamageSpec& damage, const ExcitationPulse& pulse, double cg,
                        double cp, std::size_t n_samples, double sample_rate);

Waveform temperature_shift(const Waveform& w0, double temperature, double distance_m, double cg0,
                           double cgT);

Waveform add_noise(const Waveform& w, double snr_db, std::uint64_t seed);

struct DatasetConfig {
  ExcitationPulse pulse;
  double sample_rate = 10e6;    // Hz
  double duration = 150e-6;     // s
  std::vector<double> temperatures;
  std::vector<std::optional<double>> snr_list;  // nullopt = noiseless
  int reps = 1;
};

// Invoked once per record, in record-index order when serial; records are
// independent and fully determined by (config, master seed, index).
using RecordSink = std::function<void(std::size_t index, const Waveform&)>;

std::size_t dataset_size(const SensorLayout& layout, std::size_t n_damages,
                         const DatasetConfig& cfg);

void generate_dataset(const SensorLayout& layout, const std::vector<DamageSpec>& damages,
                      const DatasetConfig& cfg, const VelocityModel& vel, std::uint64_t seed,
                      std::uint64_t stage, const RecordSink& sink);

std::vector<Waveform> generate_dataset(const SensorLayout& layout,
                                       const std::vector<DamageSpec>& damages,
                                       const DatasetConfig& cfg, const VelocityModel& vel,
                                       std::uint64_t seed, std::uint64_t stage = 1);

}  // namespace gw
