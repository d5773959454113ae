#pragma once

#include "gw/types.hpp"

namespace gw {

struct Envelope {
  std::vector<double> times;      // s
  std::vector<double> magnitude;  // |CWT| at the excitation scale
};

// Magnitude of the continuous wavelet transform at the single scale matching
// f0, analytic Morlet atom with center frequency parameter omega0 = 6.
Envelope morlet_envelope(const Waveform& w, double f0);

double time_of_flight(const Envelope& tx_env, const Envelope& rx_env);

Waveform moving_average(const Waveform& w, int kernel);

double estimate_group_velocity(const SensorLayout& layout, const SensorPath& path,
                               const Waveform& w_tx, const Waveform& w_rx, double f0);

}  // namespace gw
