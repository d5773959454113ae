#include "gw/dispersion.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <optional>

#include <nlohmann/json.hpp>

namespace gw {

namespace {

constexpr double kPi = std::numbers::pi;

// tanh(sqrt(x2) * s) continued through negative radicands: tanh(i y) = i tan(y).
// Returns the real magnitude and whether a factor of i applies.
struct ContinuedTanh {
  double value = 0.0;  // tanh(r s) or tan(r s)
  double root = 0.0;   // |sqrt(x2)|
  bool imaginary = false;
};

ContinuedTanh continued_tanh(double x2, double s) {
  ContinuedTanh out;
  if (x2 >= 0.0) {
    out.root = std::sqrt(x2);
    out.value = std::tanh(out.root * s);
  } else {
    out.root = std::sqrt(-x2);
    out.value = std::tan(out.root * s);
    out.imaginary = true;
  }
  return out;
}

}  // namespace

const char* lamb_mode_name(LambMode m) { return m == LambMode::S0 ? "S0" : "A0"; }

LambMode lamb_mode_from_name(const std::string& s) {
  if (s == "S0" || s == "s0") return LambMode::S0;
  if (s == "A0" || s == "a0") return LambMode::A0;
  throw Error(ErrorCode::Validation, "unknown Lamb mode '" + s + "'");
}

void MaterialState::validate() const {
  if (!(youngs_modulus > 0.0))
    throw Error(ErrorCode::Validation, "Young's modulus must be positive");
  if (!(poisson_ratio > 0.0 && poisson_ratio < 0.5))
    throw Error(ErrorCode::Validation, "Poisson ratio must lie in (0, 0.5)");
  if (!(density > 0.0)) throw Error(ErrorCode::Validation, "density must be positive");
}

MaterialTable::MaterialTable(std::vector<MaterialState> anchors) : anchors_(std::move(anchors)) {
  if (anchors_.empty()) throw Error(ErrorCode::Validation, "material table needs anchors");
  for (std::size_t i = 0; i < anchors_.size(); ++i) {
    anchors_[i].validate();
    if (i > 0 && !(anchors_[i].temperature > anchors_[i - 1].temperature))
      throw Error(ErrorCode::Validation, "material anchor temperatures must strictly increase");
  }
}

MaterialState MaterialTable::at(double temperature) const {
  if (temperature < min_temperature() || temperature > max_temperature())
    throw Error(ErrorCode::Validation,
                "temperature " + std::to_string(temperature) + " outside material table range");
  if (anchors_.size() == 1) return anchors_.front();
  auto hi = std::lower_bound(anchors_.begin(), anchors_.end(), temperature,
                             [](const MaterialState& a, double t) { return a.temperature < t; });
  if (hi == anchors_.begin()) return anchors_.front();
  if (hi == anchors_.end()) return anchors_.back();
  const MaterialState& b = *hi;
  const MaterialState& a = *(hi - 1);
  double w = (temperature - a.temperature) / (b.temperature - a.temperature);
  MaterialState out;
  out.youngs_modulus = a.youngs_modulus + w * (b.youngs_modulus - a.youngs_modulus);
  out.poisson_ratio = a.poisson_ratio + w * (b.poisson_ratio - a.poisson_ratio);
  out.density = a.density + w * (b.density - a.density);
  out.temperature = temperature;
  return out;
}

MaterialTable MaterialTable::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Io, "cannot open material file " + path);
  nlohmann::json j;
  in >> j;
  std::vector<MaterialState> anchors;
  for (const auto& a : j.at("anchors")) {
    MaterialState m;
    m.temperature = a.at("temperature_c").get<double>();
    m.youngs_modulus = a.at("youngs_modulus_pa").get<double>();
    m.poisson_ratio = a.at("poisson_ratio").get<double>();
    m.density = a.at("density_kg_m3").get<double>();
    anchors.push_back(m);
  }
  return MaterialTable(std::move(anchors));
}

void MaterialTable::save(const std::string& path) const {
  nlohmann::json j;
  for (const auto& a : anchors_) {
    j["anchors"].push_back({{"temperature_c", a.temperature},
                            {"youngs_modulus_pa", a.youngs_modulus},
                            {"poisson_ratio", a.poisson_ratio},
                            {"density_kg_m3", a.density}});
  }
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::Io, "cannot write material file " + path);
  out << j.dump(2) << "\n";
}

Lame lame_constants(const MaterialState& m) {
  m.validate();
  Lame l;
  l.lambda = m.poisson_ratio * m.youngs_modulus /
             ((1.0 + m.poisson_ratio) * (1.0 - 2.0 * m.poisson_ratio));
  l.mu = m.youngs_modulus / (2.0 * (1.0 + m.poisson_ratio));
  return l;
}

BulkVelocities bulk_velocities(const MaterialState& m) {
  const Lame l = lame_constants(m);
  BulkVelocities v;
  v.vp = std::sqrt((l.lambda + 2.0 * l.mu) / m.density);
  v.vs = std::sqrt(l.mu / m.density);
  return v;
}

double rayleigh_lamb_residual(double k, double omega, double h, double vp, double vs,
                              LambMode mode) {
  if (!(omega > 0.0) || !(h > 0.0) || !(k > 0.0))
    throw Error(ErrorCode::Validation, "rayleigh_lamb_residual requires omega, h, k > 0");
  const double s = 0.5 * h;
  const double a2 = k * k - (omega / vp) * (omega / vp);
  const double b2 = k * k - (omega / vs) * (omega / vs);
  const ContinuedTanh ta = continued_tanh(a2, s);
  const ContinuedTanh tb = continued_tanh(b2, s);
  // (k^2 + beta^2)^2 is real regardless of the branch.
  const double kb = k * k + b2;
  const double kb2 = kb * kb;
  // alpha*beta carries i^(ia+ib) and the tanh ratio i^(ib-ia). Dividing the
  // whole equation by the common i power leaves a real residual with a sign
  // that depends on where the i factors sit:
  //   symmetric (alpha*beta in the numerator):  -1 iff both roots imaginary,
  //   antisymmetric (alpha*beta in denominator): -1 iff beta imaginary.
  if (ta.value == 0.0) throw Error(ErrorCode::Validation, "pole: tanh(alpha h/2) = 0");
  if (mode == LambMode::S0) {
    const double sgn = (ta.imaginary && tb.imaginary) ? -1.0 : 1.0;
    if (kb2 == 0.0) throw Error(ErrorCode::Validation, "pole: (k^2 + beta^2)^2 = 0");
    return tb.value / ta.value - sgn * 4.0 * k * k * ta.root * tb.root / kb2;
  }
  const double sgn = tb.imaginary ? -1.0 : 1.0;
  const double ab = 4.0 * k * k * ta.root * tb.root;
  if (ab == 0.0) throw Error(ErrorCode::Validation, "pole: 4 k^2 alpha beta = 0");
  return tb.value / ta.value - sgn * kb2 / ab;
}

namespace {

struct ResidualFn {
  double omega, h, vp, vs;
  LambMode mode;

  // Returns nullopt at a pole.
  std::optional<double> operator()(double cp) const {
    const double k = omega / cp;
    try {
      return rayleigh_lamb_residual(k, omega, h, vp, vs, mode);
    } catch (const Error&) {
      return std::nullopt;
    }
  }
};

}  // namespace

double solve_phase_velocity(double f, double h, const MaterialState& m, LambMode mode,
                            const SolverConfig& cfg) {
  if (!(f > 0.0)) throw Error(ErrorCode::Validation, "frequency must be positive");
  const BulkVelocities v = bulk_velocities(m);
  const double omega = 2.0 * kPi * f;
  const ResidualFn fn{omega, h, v.vp, v.vs, mode};

  // The real-form residual changes representation at c_p = V_S and c_p = V_P
  // (alpha or beta passes through zero). Brackets never straddle those points:
  // the beta = 0 degeneracy is a removable zero, not a Lamb root.
  const double eps = 1e-9;
  const double segments[3][2] = {
      {cfg.cp_scan_start, v.vs * (1.0 - eps)},
      {v.vs * (1.0 + eps), v.vp * (1.0 - eps)},
      {v.vp * (1.0 + eps), cfg.cp_scan_factor * v.vp},
  };

  std::vector<double> roots;
  for (const auto& seg : segments) {
    const double lo = seg[0], hi = seg[1];
    if (!(hi > lo)) continue;
    const int n = std::max(2, static_cast<int>((hi - lo) / cfg.cp_scan_step) + 1);
    std::optional<double> prev_val;
    double prev_cp = 0.0;
    for (int i = 0; i <= n; ++i) {
      const double cp = lo + (hi - lo) * i / n;
      const std::optional<double> val = fn(cp);
      if (val && prev_val && *prev_val * *val < 0.0) {
        double a = prev_cp, b = cp, fa = *prev_val;
        while (b - a > cfg.rel_tol * b) {
          const double mid = 0.5 * (a + b);
          const std::optional<double> fm = fn(mid);
          if (!fm) break;
          if (fa * *fm <= 0.0) {
            b = mid;
          } else {
            a = mid;
            fa = *fm;
          }
        }
        const double mid = 0.5 * (a + b);
        const std::optional<double> fm = fn(mid);
        // A bracket that shrinks onto a sign flip with a large residual is a
        // pole (tan jump), not a root.
        if (fm && std::abs(*fm) < cfg.residual_tol) roots.push_back(mid);
      }
      if (val) {
        prev_val = val;
        prev_cp = cp;
      } else {
        prev_val.reset();
      }
    }
  }

  if (roots.empty())
    throw Error(ErrorCode::NoRootFound, std::string("no ") + lamb_mode_name(mode) +
                                            " root found at f=" + std::to_string(f));
  if (roots.size() > 1)
    throw Error(ErrorCode::MultipleRoots,
                std::string("multiple ") + lamb_mode_name(mode) +
                    " roots found; configuration outside fundamental regime");
  return roots.front();
}

double group_velocity(double f, double h, const MaterialState& m, LambMode mode,
                      const SolverConfig& cfg) {
  const double df = cfg.group_velocity_df;
  const double cp0 = solve_phase_velocity(f, h, m, mode, cfg);
  const double cpm = solve_phase_velocity(f - df, h, m, mode, cfg);
  const double cpp = solve_phase_velocity(f + df, h, m, mode, cfg);
  const double km = 2.0 * kPi * (f - df) / cpm;
  const double kp = 2.0 * kPi * (f + df) / cpp;
  const double k0 = 2.0 * kPi * f / cp0;
  const double cg = cp0 + k0 * (cpp - cpm) / (kp - km);
  if (!(cg > 0.0)) throw Error(ErrorCode::NoRootFound, "nonpositive group velocity");
  return cg;
}

DispersionPoint solve_dispersion_point(double f, double h, const MaterialState& m, LambMode mode,
                                       const SolverConfig& cfg) {
  DispersionPoint p;
  p.frequency = f;
  p.mode = mode;
  p.temperature = m.temperature;
  p.phase_velocity = solve_phase_velocity(f, h, m, mode, cfg);
  p.group_velocity = group_velocity(f, h, m, mode, cfg);
  p.wavenumber = 2.0 * kPi * f / p.phase_velocity;
  return p;
}

std::vector<DispersionPoint> temperature_sweep(double f, double h, const MaterialTable& table,
                                               LambMode mode, const std::vector<double>& t_list,
                                               const SolverConfig& cfg) {
  std::vector<DispersionPoint> out(t_list.size());
#pragma omp parallel for schedule(dynamic)
  for (std::size_t i = 0; i < t_list.size(); ++i) {
    out[i] = solve_dispersion_point(f, h, table.at(t_list[i]), mode, cfg);
  }
  return out;
}

}  // namespace gw
