#pragma once

#include "memdrift/device_model.hpp"
#include "memdrift/integrator.hpp"
#include "memdrift/waveform.hpp"

namespace memdrift {

/// Closed-form solution of the unclipped linear-drift model.
///
/// With beta = mu_v R_ON / D the state is w = w0 + eta beta q, so the
/// memristance is M(q) = M0 - eta k q with k = mu_v R_ON (R_OFF - R_ON) / D^2.
/// Integrating dphi = M dq gives phi = M0 q - eta k q^2 / 2, whose root through
/// the origin is q = 2 phi / (M0 + sqrt(M0^2 - 2 eta k phi)). The state is
/// therefore a function of the flux alone as long as w stays inside [0, D].
struct OracleCoefficients {
  double m0;    // M(w0) [ohm]
  double beta;  // dw/dq magnitude [m/C]
  double k;     // |dM/dq| [ohm/C]
};

OracleCoefficients oracle_coefficients(const DeviceParams& p) noexcept;

/// Charge that has passed when the drive flux equals phi.
/// Throws OracleInvalid if the flux lies outside the unclipped window.
double charge_of_flux(const DeviceParams& p, double phi);

/// Flux at which the state reaches the boundary it drifts toward under
/// positive flux (D for eta = +1, 0 for eta = -1).
double clip_flux_threshold(const DeviceParams& p) noexcept;

// Throws OracleInvalid if any flux the drive reaches leaves the unclipped window.
void require_oracle_valid(const DeviceParams& p, const DriveWaveform& d);

/// Exact trace on the same time grid simulate() uses for settle_periods = 0:
/// d.periods * steps_per_period + 1 samples. q and phi are exact, not
/// accumulated.
SimTrace analytic_trace(const DeviceParams& p, const DriveWaveform& d, int steps_per_period);

struct OracleReport {
  double max_abs_w_error = 0.0;  // [m]
  double max_rel_i_error = 0.0;
  double rms_rel_m_error = 0.0;
  bool valid = true;  // false when either trace clipped
};

// Element-wise comparison. Throws InvalidArgument unless both traces share
// the exact same time grid.
OracleReport compare_traces(const SimTrace& numeric, const SimTrace& analytic);

}  // namespace memdrift
