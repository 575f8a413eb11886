#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "memdrift/device_model.hpp"
#include "memdrift/waveform.hpp"

namespace memdrift {

struct SimConfig {
  int steps_per_period = 10000;
  int settle_periods = 0;  // periods simulated ahead of the measured ones

  bool operator==(const SimConfig&) const = default;
};

// Throws InvalidArgument unless steps_per_period >= 100 and settle_periods >= 0.
void require_valid(const SimConfig& c);

struct Sample {
  double t;    // [s]
  double v;    // [V]
  double i;    // [A]
  double w;    // [m]
  double m;    // [ohm]
  double q;    // [C]
  double phi;  // [V s]

  bool operator==(const Sample&) const = default;
};

/// Uniformly sampled run of one device under one drive.
///
/// Holds (settle_periods + drive.periods) * steps_per_period + 1 samples with
/// t_j = j * (T / steps_per_period). The last steps_per_period + 1 samples
/// form the measured (final) period.
struct SimTrace {
  std::vector<Sample> samples;
  DeviceParams params;
  DriveWaveform drive;
  int steps_per_period = 0;
  bool clipped = false;

  bool operator==(const SimTrace&) const = default;
};

// Samples of the final full period, both endpoints included. Throws
// InvalidArgument if the trace is shorter than one period.
std::span<const Sample> final_period(const SimTrace& trace);

/// One classic RK4 step of dw/dt = eta mu_v R_ON V(t) / (D M(w)).
///
/// Stage evaluations use the unclamped intermediate states; only the committed
/// result is clamped to [0, D], and the returned state's clipped flag
/// accumulates onto the incoming one.
DeviceState step(const DeviceParams& p, const DriveWaveform& d, DeviceState s, double t, double dt);

// Integrates the coupled system with fixed-step RK4 and accumulates charge and
// flux by the trapezoidal rule. Invalid inputs are rejected before any work.
SimTrace simulate(const DeviceParams& p, const DriveWaveform& d, const SimConfig& c);

// Time of sample j on the uniform grid shared by simulate and analytic_trace.
inline double sample_time(std::size_t j, double dt) noexcept { return static_cast<double>(j) * dt; }

}  // namespace memdrift
