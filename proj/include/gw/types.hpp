#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gw/errors.hpp"

namespace gw {

struct Point {
  double x = 0.0;  // mm
  double y = 0.0;  // mm
};

inline double distance_mm(const Point& a, const Point& b) {
  return std::hypot(a.x - b.x, a.y - b.y);
}

struct ExcitationPulse {
  double center_frequency = 150e3;  // Hz
  int cycles = 5;
  double amplitude = 1.0;  // V

  double duration() const { return cycles / center_frequency; }
};

struct Sensor {
  int id = 0;
  Point pos;
};

struct SensorPath {
  int tx = 0;
  int rx = 0;

  std::string name() const { return "P" + std::to_string(tx) + std::to_string(rx); }
};

struct SensorLayout {
  double plate_width = 530.0;   // mm
  double plate_height = 530.0;  // mm
  std::vector<Sensor> sensors;
  std::vector<SensorPath> paths;

  const Sensor& sensor(int id) const {
    for (const auto& s : sensors)
      if (s.id == id) return s;
    throw Error(ErrorCode::Validation, "unknown sensor id " + std::to_string(id));
  }
  double path_distance_mm(const SensorPath& p) const {
    return distance_mm(sensor(p.tx).pos, sensor(p.rx).pos);
  }
  bool inside_plate(const Point& p) const {
    return p.x >= 0.0 && p.x <= plate_width && p.y >= 0.0 && p.y <= plate_height;
  }
  void validate() const;

  static SensorLayout load(const std::string& path);
  void save(const std::string& path) const;
};

enum class DamageKind { none, rivet_hole, added_mass, notch };

const char* damage_kind_name(DamageKind k);
DamageKind damage_kind_from_name(const std::string& name);

// One-hot class labels: baseline 1000, rivet hole 0100, added mass 0010, notch 0001.
using ClassLabel = std::array<std::uint8_t, 4>;
ClassLabel class_label(DamageKind k);
int class_index(DamageKind k);

struct DamageSpec {
  DamageKind kind = DamageKind::none;
  Point position;
  double scatter_amplitude = 0.0;  // fraction of direct amplitude
  double extra_phase = 0.0;        // rad, applied to the scattered echo
  double global_phase_leak = 0.0;  // rad, notch only: applied to every direct arrival

  void validate() const;
};

struct Waveform {
  std::vector<double> samples;  // V
  double sample_rate = 10e6;    // Hz
  SensorPath path;
  double temperature = 0.0;                      // degC
  std::optional<double> snr_db;                  // nullopt = noiseless
  ClassLabel label{1, 0, 0, 0};
  std::uint64_t seed = 0;

  std::size_t size() const { return samples.size(); }
  double duration() const { return samples.size() / sample_rate; }
};

}  // namespace gw
