#include "memdrift/integrator.hpp"

#include <cmath>
#include <sstream>

#include "memdrift/errors.hpp"

namespace memdrift {

void require_valid(const SimConfig& c) {
  if (c.steps_per_period < 100) {
    throw InvalidArgument("steps_per_period must be at least 100 (got " +
                          std::to_string(c.steps_per_period) + ")");
  }
  if (c.settle_periods < 0) {
    throw InvalidArgument("settle_periods must be non-negative (got " +
                          std::to_string(c.settle_periods) + ")");
  }
}

std::span<const Sample> final_period(const SimTrace& trace) {
  const auto n = static_cast<std::size_t>(trace.steps_per_period) + 1;
  if (trace.steps_per_period <= 0 || trace.samples.size() < n) {
    std::ostringstream os;
    os << "trace holds " << trace.samples.size() << " samples, fewer than one period ("
       << trace.steps_per_period << " steps)";
    throw InvalidArgument(os.str());
  }
  return std::span<const Sample>(trace.samples).last(n);
}

namespace {

double velocity(const DeviceParams& p, const DriveWaveform& d, double w, double t) noexcept {
  const double i = voltage_at(d, t) / memristance_unchecked(p, w);
  return state_derivative(p, i);
}

}  // namespace

DeviceState step(const DeviceParams& p, const DriveWaveform& d, DeviceState s, double t, double dt) {
  const double h2 = 0.5 * dt;
  const double k1 = velocity(p, d, s.w, t);
  const double k2 = velocity(p, d, s.w + h2 * k1, t + h2);
  const double k3 = velocity(p, d, s.w + h2 * k2, t + h2);
  const double k4 = velocity(p, d, s.w + dt * k3, t + dt);
  const double next = s.w + dt / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  if (!std::isfinite(next)) {
    std::ostringstream os;
    os << "non-finite state after RK4 step at t=" << t;
    throw NumericalError(os.str());
  }
  const auto [w, hit] = clip_state(p, next);
  return {w, s.clipped || hit};
}

SimTrace simulate(const DeviceParams& p, const DriveWaveform& d, const SimConfig& c) {
  require_valid(p);
  require_valid(d);
  require_valid(c);

  const auto steps = static_cast<std::size_t>(c.steps_per_period);
  const auto total = static_cast<std::size_t>(c.settle_periods + d.periods) * steps;
  const double dt = d.period() / static_cast<double>(steps);

  SimTrace trace;
  trace.params = p;
  trace.drive = d;
  trace.steps_per_period = c.steps_per_period;
  trace.samples.reserve(total + 1);

  DeviceState state{p.w0, false};
  auto make_sample = [&](std::size_t j) {
    const double t = sample_time(j, dt);
    const double v = voltage_at(d, t);
    const double m = memristance(p, state.w);
    return Sample{t, v, v / m, state.w, m, 0.0, 0.0};
  };

  trace.samples.push_back(make_sample(0));
  for (std::size_t j = 0; j < total; ++j) {
    state = step(p, d, state, sample_time(j, dt), dt);
    const Sample& prev = trace.samples.back();
    Sample next = make_sample(j + 1);
    next.q = prev.q + 0.5 * dt * (prev.i + next.i);
    next.phi = prev.phi + 0.5 * dt * (prev.v + next.v);
    trace.samples.push_back(next);
  }
  trace.clipped = state.clipped;
  return trace;
}

}  // namespace memdrift
