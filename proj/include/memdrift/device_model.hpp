#pragma once

#include <string>
#include <utility>
#include <vector>

namespace memdrift {

/// Physical constants of one linear-drift memristor, all in SI units.
///
/// Defaults describe a 10 nm TiO2 cell with a 2 nm doped layer,
/// R_OFF/R_ON = 200 and vacancy mobility 1e-14 m^2/(V s). Only the ratio of
/// the two resistances is fixed by the device data; R_ON = 100 ohm puts the
/// read current at 0.2 V in the 1e-5 A range.
struct DeviceParams {
  double D = 10e-9;       // device thickness [m]
  double w0 = 2e-9;       // initial doped-region width [m]
  double r_on = 100.0;    // fully doped resistance [ohm]
  double r_off = 20000.0; // fully undoped resistance [ohm]
  double mu_v = 1e-14;    // dopant drift mobility [m^2 V^-1 s^-1]
  int eta = +1;           // polarity, +1 or -1

  bool operator==(const DeviceParams&) const = default;
};

struct DeviceState {
  double w = 0.0;        // doped-region width [m]
  bool clipped = false;  // w has touched 0 or D at some point
};

struct ParamViolation {
  std::string field;
  double value;
  std::string message;
};

struct ValidationResult {
  std::vector<ParamViolation> violations;

  bool ok() const noexcept { return violations.empty(); }
  explicit operator bool() const noexcept { return ok(); }
  // All messages joined with "; ", each prefixed by field and value.
  std::string summary() const;
};

ValidationResult validate_params(const DeviceParams& p);

// Throws InvalidArgument carrying validate_params(p).summary() if invalid.
void require_valid(const DeviceParams& p);

/// Memristance M(w) = R_ON w/D + R_OFF (1 - w/D).
/// Throws InvalidArgument when w lies outside [0, D].
double memristance(const DeviceParams& p, double w);

// Same affine form without the range check; used for intermediate
// Runge-Kutta stages that may sit marginally outside the physical range.
double memristance_unchecked(const DeviceParams& p, double w) noexcept;

/// Boundary velocity dw/dt = eta mu_v R_ON i / D for current i [A].
double state_derivative(const DeviceParams& p, double current) noexcept;

/// Clamps w into [0, D]; second is true iff clamping changed the value.
std::pair<double, bool> clip_state(const DeviceParams& p, double w) noexcept;

}  // namespace memdrift
