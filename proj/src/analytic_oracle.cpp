#include "memdrift/analytic_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "memdrift/errors.hpp"

namespace memdrift {

OracleCoefficients oracle_coefficients(const DeviceParams& p) noexcept {
  return {memristance_unchecked(p, p.w0), p.mu_v * p.r_on / p.D,
          p.mu_v * p.r_on * (p.r_off - p.r_on) / (p.D * p.D)};
}

double charge_of_flux(const DeviceParams& p, double phi) {
  const auto c = oracle_coefficients(p);
  const double disc = c.m0 * c.m0 - 2.0 * p.eta * c.k * phi;
  auto invalid = [&](const char* why) {
    std::ostringstream os;
    os << "analytic solution invalid (clipping/turnover regime): phi=" << phi << " " << why;
    return OracleInvalid(os.str());
  };
  if (!(disc >= 0.0)) throw invalid("has no real charge");
  // Cancellation-free root; reduces to phi / M0 as k -> 0.
  const double q = 2.0 * phi / (c.m0 + std::sqrt(disc));
  const double w = p.w0 + p.eta * c.beta * q;
  if (!(w >= 0.0 && w <= p.D)) throw invalid("drives the state out of [0, D]");
  return q;
}

double clip_flux_threshold(const DeviceParams& p) noexcept {
  const auto c = oracle_coefficients(p);
  const double target = p.eta > 0 ? p.D : 0.0;
  const double q_b = (target - p.w0) / (p.eta * c.beta);
  return c.m0 * q_b - p.eta * c.k * q_b * q_b / 2.0;
}

void require_oracle_valid(const DeviceParams& p, const DriveWaveform& d) {
  const auto range = flux_range(d);
  charge_of_flux(p, range.min);
  charge_of_flux(p, range.max);
}

SimTrace analytic_trace(const DeviceParams& p, const DriveWaveform& d, int steps_per_period) {
  require_valid(p);
  require_valid(d);
  require_valid(SimConfig{steps_per_period, 0});
  require_oracle_valid(p, d);

  const auto c = oracle_coefficients(p);
  const auto steps = static_cast<std::size_t>(steps_per_period);
  const auto total = static_cast<std::size_t>(d.periods) * steps;
  const double dt = d.period() / static_cast<double>(steps);

  SimTrace trace;
  trace.params = p;
  trace.drive = d;
  trace.steps_per_period = steps_per_period;
  trace.samples.reserve(total + 1);
  for (std::size_t j = 0; j <= total; ++j) {
    const double t = sample_time(j, dt);
    const double phi = flux_at(d, t);
    const double q = charge_of_flux(p, phi);
    const double w = std::clamp(p.w0 + p.eta * c.beta * q, 0.0, p.D);
    const double v = voltage_at(d, t);
    const double m = memristance(p, w);
    trace.samples.push_back({t, v, v / m, w, m, q, phi});
  }
  return trace;
}

OracleReport compare_traces(const SimTrace& numeric, const SimTrace& analytic) {
  const auto& a = numeric.samples;
  const auto& b = analytic.samples;
  if (a.size() != b.size()) {
    throw InvalidArgument("compare_traces: sample counts differ (" + std::to_string(a.size()) +
                          " vs " + std::to_string(b.size()) + ")");
  }
  OracleReport r;
  r.valid = !numeric.clipped && !analytic.clipped;
  if (a.empty()) return r;

  double sum_sq_m = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (a[j].t != b[j].t) {
      throw InvalidArgument("compare_traces: time grids differ at sample " + std::to_string(j));
    }
    r.max_abs_w_error = std::max(r.max_abs_w_error, std::abs(a[j].w - b[j].w));

    const double di = std::abs(a[j].i - b[j].i);
    const double ref = std::abs(b[j].i);
    if (ref > 0.0) {
      r.max_rel_i_error = std::max(r.max_rel_i_error, di / ref);
    } else if (di > 0.0) {
      r.max_rel_i_error = std::max(r.max_rel_i_error, 1.0);
    }

    const double rel_m = (a[j].m - b[j].m) / b[j].m;
    sum_sq_m += rel_m * rel_m;
  }
  r.rms_rel_m_error = std::sqrt(sum_sq_m / static_cast<double>(a.size()));
  return r;
}

}  // namespace memdrift
