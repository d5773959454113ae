#pragma once

#include <string>
#include <vector>

#include "gw/errors.hpp"

namespace gw {

enum class LambMode { S0, A0 };

const char* lamb_mode_name(LambMode m);
LambMode lamb_mode_from_name(const std::string& s);

struct MaterialState {
  double youngs_modulus = 0.0;  // Pa
  double poisson_ratio = 0.0;
  double density = 0.0;  // kg/m^3
  double temperature = 0.0;  // degC

  void validate() const;
};

// Temperature-dependent material properties, linearly interpolated between
// anchor points with strictly increasing temperatures.
class MaterialTable {
 public:
  explicit MaterialTable(std::vector<MaterialState> anchors);

  MaterialState at(double temperature) const;
  double min_temperature() const { return anchors_.front().temperature; }
  double max_temperature() const { return anchors_.back().temperature; }
  const std::vector<MaterialState>& anchors() const { return anchors_; }

  static MaterialTable load(const std::string& path);
  void save(const std::string& path) const;

 private:
  std::vector<MaterialState> anchors_;
};

struct DispersionPoint {
  double frequency = 0.0;      // Hz
  LambMode mode = LambMode::S0;
  double phase_velocity = 0.0;  // m/s
  double group_velocity = 0.0;  // m/s
  double wavenumber = 0.0;      // rad/m
  double temperature = 0.0;     // degC
};

struct Lame {
  double lambda = 0.0;  // Pa
  double mu = 0.0;      // Pa
};

struct BulkVelocities {
  double vp = 0.0;  // m/s
  double vs = 0.0;  // m/s
};

Lame lame_constants(const MaterialState& m);
BulkVelocities bulk_velocities(const MaterialState& m);

// LHS - RHS of the Rayleigh-Lamb equation in its real form. For phase
// velocities where alpha or beta turn imaginary, tanh of the imaginary
// argument is evaluated as tan so the residual stays real and bracketing
// remains valid. Throws on an exact pole (vanishing denominator).
double rayleigh_lamb_residual(double k, double omega, double h, double vp, double vs,
                              LambMode mode);

struct SolverConfig {
  double cp_scan_start = 50.0;  // m/s
  double cp_scan_step = 50.0;   // m/s
  double cp_scan_factor = 1.2;  // scan up to factor * V_P
  double rel_tol = 1e-9;
  double residual_tol = 1e-6;
  double group_velocity_df = 100.0;  // Hz
};

double solve_phase_velocity(double f, double h, const MaterialState& m, LambMode mode,
                            const SolverConfig& cfg = {});
double group_velocity(double f, double h, const MaterialState& m, LambMode mode,
                      const SolverConfig& cfg = {});
DispersionPoint solve_dispersion_point(double f, double h, const MaterialState& m, LambMode mode,
                                       const SolverConfig& cfg = {});

std::vector<DispersionPoint> temperature_sweep(double f, double h, const MaterialTable& table,
                                               LambMode mode, const std::vector<double>& t_list,
                                               const SolverConfig& cfg = {});

}  // namespace gw
