#include "gw/types.hpp"

#include <fstream>
#include <set>

#include <nlohmann/json.hpp>

namespace gw {

void SensorLayout::validate() const {
  if (!(plate_width > 0.0) || !(plate_height > 0.0))
    throw Error(ErrorCode::Validation, "plate dimensions must be positive");
  if (sensors.empty()) throw Error(ErrorCode::Validation, "layout has no sensors");
  std::set<int> ids;
  for (const auto& s : sensors) {
    if (!ids.insert(s.id).second)
      throw Error(ErrorCode::Validation, "duplicate sensor id " + std::to_string(s.id));
    if (!inside_plate(s.pos))
      throw Error(ErrorCode::Validation, "sensor " + std::to_string(s.id) + " outside plate");
  }
  if (paths.empty()) throw Error(ErrorCode::Validation, "layout has no paths");
  std::set<std::pair<int, int>> seen;
  for (const auto& p : paths) {
    if (!ids.count(p.tx) || !ids.count(p.rx))
      throw Error(ErrorCode::Validation, "path " + p.name() + " references unknown sensor");
    if (!(path_distance_mm(p) > 0.0))
      throw Error(ErrorCode::CoincidentSensors, "path " + p.name() + " has zero length");
    if (!seen.insert({p.tx, p.rx}).second)
      throw Error(ErrorCode::Validation, "duplicate path " + p.name());
  }
}

SensorLayout SensorLayout::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Io, "cannot open layout file " + path);
  nlohmann::json j;
  in >> j;
  SensorLayout out;
  out.plate_width = j.at("plate_mm").at(0).get<double>();
  out.plate_height = j.at("plate_mm").at(1).get<double>();
  for (const auto& s : j.at("sensors")) {
    out.sensors.push_back(
        {s.at("id").get<int>(), {s.at("x_mm").get<double>(), s.at("y_mm").get<double>()}});
  }
  for (const auto& p : j.at("paths")) {
    out.paths.push_back({p.at(0).get<int>(), p.at(1).get<int>()});
  }
  out.validate();
  return out;
}

void SensorLayout::save(const std::string& path) const {
  nlohmann::json j;
  j["plate_mm"] = {plate_width, plate_height};
  for (const auto& s : sensors)
    j["sensors"].push_back({{"id", s.id}, {"x_mm", s.pos.x}, {"y_mm", s.pos.y}});
  for (const auto& p : paths) j["paths"].push_back({p.tx, p.rx});
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::Io, "cannot write layout file " + path);
  out << j.dump(2) << "\n";
}

const char* damage_kind_name(DamageKind k) {
  switch (k) {
    case DamageKind::none: return "baseline";
    case DamageKind::rivet_hole: return "rivet_hole";
    case DamageKind::added_mass: return "added_mass";
    case DamageKind::notch: return "notch";
  }
  return "unknown";
}

DamageKind damage_kind_from_name(const std::string& name) {
  if (name == "baseline" || name == "none") return DamageKind::none;
  if (name == "rivet_hole") return DamageKind::rivet_hole;
  if (name == "added_mass") return DamageKind::added_mass;
  if (name == "notch") return DamageKind::notch;
  throw Error(ErrorCode::Validation, "unknown damage kind '" + name + "'");
}

int class_index(DamageKind k) { return static_cast<int>(k); }

ClassLabel class_label(DamageKind k) {
  ClassLabel l{0, 0, 0, 0};
  l[static_cast<std::size_t>(class_index(k))] = 1;
  return l;
}

void DamageSpec::validate() const {
  if (kind == DamageKind::none) {
    if (scatter_amplitude != 0.0 || extra_phase != 0.0 || global_phase_leak != 0.0)
      throw Error(ErrorCode::Validation, "baseline damage spec must have zero scatter and phases");
  } else if (!(scatter_amplitude >= 0.0)) {
    throw Error(ErrorCode::Validation, "scatter amplitude must be nonnegative");
  }
  if (kind != DamageKind::notch && global_phase_leak != 0.0)
    throw Error(ErrorCode::Validation, "global phase leak applies to notch damage only");
}

}  // namespace gw
