#include "memdrift/waveform.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "memdrift/errors.hpp"

namespace memdrift {

void require_valid(const DriveWaveform& d) {
  std::ostringstream os;
  if (!(std::isfinite(d.v0) && d.v0 >= 0)) os << "amplitude must be non-negative (got " << d.v0 << "); ";
  if (!(std::isfinite(d.freq) && d.freq > 0)) os << "frequency must be positive (got " << d.freq << "); ";
  if (!std::isfinite(d.phase)) os << "phase must be finite; ";
  if (d.periods < 1) os << "periods must be at least 1 (got " << d.periods << "); ";
  auto msg = os.str();
  if (!msg.empty()) {
    msg.resize(msg.size() - 2);
    throw InvalidArgument("invalid drive: " + msg);
  }
}

double voltage_at(const DriveWaveform& d, double t) noexcept {
  return d.v0 * std::sin(2.0 * std::numbers::pi * d.freq * t + d.phase);
}

double flux_at(const DriveWaveform& d, double t) noexcept {
  const double omega = 2.0 * std::numbers::pi * d.freq;
  if (d.phase == 0.0) return d.v0 * (1.0 - std::cos(omega * t)) / omega;
  return d.v0 * (std::cos(d.phase) - std::cos(omega * t + d.phase)) / omega;
}

FluxRange flux_range(const DriveWaveform& d) noexcept {
  const double omega = 2.0 * std::numbers::pi * d.freq;
  const double c = std::cos(d.phase);
  return {d.v0 * (c - 1.0) / omega, d.v0 * (c + 1.0) / omega};
}

}  // namespace memdrift
