#include "memdrift/device_model.hpp"

#include <cmath>
#include <sstream>

#include "memdrift/errors.hpp"

namespace memdrift {

std::string ValidationResult::summary() const {
  std::ostringstream os;
  for (std::size_t k = 0; k < violations.size(); ++k) {
    if (k) os << "; ";
    const auto& v = violations[k];
    os << v.field << "=" << v.value << ": " << v.message;
  }
  return os.str();
}

ValidationResult validate_params(const DeviceParams& p) {
  ValidationResult r;
  auto fail = [&](const char* field, double value, const char* msg) {
    r.violations.push_back({field, value, msg});
  };

  if (!(std::isfinite(p.D) && p.D > 0)) fail("D", p.D, "D must be positive");
  if (!(std::isfinite(p.w0) && p.w0 >= 0)) fail("w0", p.w0, "w0 must be non-negative");
  else if (p.D > 0 && p.w0 > p.D) fail("w0", p.w0, "w0 exceeds D");
  if (!(std::isfinite(p.r_on) && p.r_on > 0)) fail("r_on", p.r_on, "r_on must be positive");
  if (!std::isfinite(p.r_off)) fail("r_off", p.r_off, "r_off must be finite");
  else if (!(p.r_on < p.r_off)) fail("r_off", p.r_off, "r_on must be strictly less than r_off");
  if (!(std::isfinite(p.mu_v) && p.mu_v > 0)) fail("mu_v", p.mu_v, "mu_v must be positive");
  if (p.eta != 1 && p.eta != -1) fail("eta", p.eta, "eta must be +1 or -1");
  return r;
}

void require_valid(const DeviceParams& p) {
  auto r = validate_params(p);
  if (!r) throw InvalidArgument("invalid device parameters: " + r.summary());
}

double memristance_unchecked(const DeviceParams& p, double w) noexcept {
  const double x = w / p.D;
  return p.r_on * x + p.r_off * (1.0 - x);
}

double memristance(const DeviceParams& p, double w) {
  if (!(w >= 0.0 && w <= p.D)) {
    std::ostringstream os;
    os << "memristance: w=" << w << " outside [0, " << p.D << "]";
    throw InvalidArgument(os.str());
  }
  return memristance_unchecked(p, w);
}

double state_derivative(const DeviceParams& p, double current) noexcept {
  return p.eta * p.mu_v * p.r_on * current / p.D;
}

std::pair<double, bool> clip_state(const DeviceParams& p, double w) noexcept {
  if (w < 0.0) return {0.0, true};
  if (w > p.D) return {p.D, true};
  return {w, false};
}

}  // namespace memdrift
