#include "memdrift/metrics.hpp"

#include <algorithm>
#include <cmath>

#include "memdrift/errors.hpp"

namespace memdrift {

void require_valid(const MetricsConfig& c) {
  if (!(std::isfinite(c.i_sense) && c.i_sense > 0)) {
    throw InvalidArgument("i_sense must be positive (got " + std::to_string(c.i_sense) + ")");
  }
}

ResistanceStates extract_lrs_hrs(const SimTrace& trace) {
  if (trace.samples.empty()) throw InvalidArgument("extract_lrs_hrs: empty trace");
  const auto cycle = final_period(trace);
  const auto [lo, hi] = std::minmax_element(cycle.begin(), cycle.end(),
                                            [](const Sample& a, const Sample& b) { return a.m < b.m; });
  return {lo->m, hi->m};
}

MemoryWindow memory_window(double lrs, double hrs) {
  if (!(lrs > 0)) throw InvalidArgument("memory_window: lrs must be positive");
  if (!(hrs >= lrs)) throw InvalidArgument("memory_window: hrs must not be below lrs");
  return {hrs / lrs, hrs - lrs};
}

std::vector<ZeroCrossing> voltage_zero_crossings(const SimTrace& trace) {
  const auto cycle = final_period(trace);
  const std::size_t n = cycle.size();
  std::vector<ZeroCrossing> out;
  for (std::size_t e = 0; e < n; ++e) {
    const Sample& a = cycle[e];
    const Sample& b = cycle[(e + 1) % n];
    if ((a.v >= 0.0) == (b.v >= 0.0)) continue;
    const double f = a.v / (a.v - b.v);
    // Closing edge: the sample at t = T and the one at t = 0 are the same phase point.
    const double tb = e + 1 < n ? b.t : a.t;
    out.push_back({e, a.t + f * (tb - a.t), a.i + f * (b.i - a.i)});
  }
  return out;
}

namespace {

struct Point {
  double x;
  double y;
};

double shoelace(const std::vector<Point>& poly) {
  double twice = 0.0;
  for (std::size_t k = 0; k < poly.size(); ++k) {
    const Point& a = poly[k];
    const Point& b = poly[(k + 1) % poly.size()];
    twice += a.x * b.y - b.x * a.y;
  }
  return 0.5 * twice;
}

}  // namespace

double loop_area(const SimTrace& trace) {
  const auto cycle = final_period(trace);
  const std::size_t n = cycle.size();
  const auto crossings = voltage_zero_crossings(trace);

  if (crossings.empty()) {
    std::vector<Point> poly;
    poly.reserve(n);
    for (const auto& s : cycle) poly.push_back({s.v, s.i});
    return std::abs(shoelace(poly));
  }

  double total = 0.0;
  for (std::size_t c = 0; c < crossings.size(); ++c) {
    const auto& from = crossings[c];
    const auto& to = crossings[(c + 1) % crossings.size()];
    std::vector<Point> lobe{{0.0, from.i}};
    // Samples strictly after the crossing edge up to and including the start
    // of the next crossing edge, walking cyclically.
    std::size_t k = (from.edge + 1) % n;
    while (true) {
      lobe.push_back({cycle[k].v, cycle[k].i});
      if (k == to.edge) break;
      k = (k + 1) % n;
    }
    lobe.push_back({0.0, to.i});
    if (lobe.size() < 3) throw InvalidArgument("loop_area: lobe with fewer than 3 points");
    total += std::abs(shoelace(lobe));
  }
  return total;
}

double peak_current(const SimTrace& trace) {
  double peak = 0.0;
  for (const auto& s : final_period(trace)) peak = std::max(peak, std::abs(s.i));
  return peak;
}

double lifetime_margin(double peak, const MetricsConfig& cfg) {
  require_valid(cfg);
  if (!(peak >= 0)) throw InvalidArgument("lifetime_margin: peak current must be non-negative");
  return peak / cfg.i_sense;
}

double qphi_nonlinearity(const SimTrace& trace) {
  const auto cycle = final_period(trace);
  const double n = static_cast<double>(cycle.size());
  double mean_phi = 0.0;
  double mean_q = 0.0;
  for (const auto& s : cycle) {
    mean_phi += s.phi;
    mean_q += s.q;
  }
  mean_phi /= n;
  mean_q /= n;

  double sxx = 0.0;
  double syy = 0.0;
  double sxy = 0.0;
  for (const auto& s : cycle) {
    const double dx = s.phi - mean_phi;
    const double dy = s.q - mean_q;
    sxx += dx * dx;
    syy += dy * dy;
    sxy += dx * dy;
  }
  if (!(sxx > 0.0)) throw DegenerateFit("qphi_nonlinearity: flux is constant over the cycle");
  if (syy == 0.0) return 0.0;  // horizontal line fits exactly

  const double r2 = (sxy / sxx) * (sxy / syy);
  return std::clamp(1.0 - r2, 0.0, 1.0);
}

CycleMetrics cycle_metrics(const SimTrace& trace, const MetricsConfig& cfg) {
  require_valid(cfg);
  CycleMetrics m;
  m.v0 = trace.drive.v0;
  m.freq = trace.drive.freq;

  const auto states = extract_lrs_hrs(trace);
  m.lrs = states.lrs;
  m.hrs = states.hrs;
  const auto window = memory_window(m.lrs, m.hrs);
  m.window_ratio = window.ratio;
  m.window_diff = window.diff;
  m.loop_area = loop_area(trace);
  m.peak_current = peak_current(trace);
  m.tau = lifetime_margin(m.peak_current, cfg);
  try {
    m.qphi_nonlinearity = qphi_nonlinearity(trace);
  } catch (const DegenerateFit&) {
    m.qphi_nonlinearity = 0.0;
  }
  m.clipped = trace.clipped;
  return m;
}

}  // namespace memdrift
