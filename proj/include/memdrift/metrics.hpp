#pragma once

#include <vector>

#include "memdrift/integrator.hpp"

namespace memdrift {

struct MetricsConfig {
  double i_sense = 1e-6;  // smallest current the sense amplifier resolves [A]

  bool operator==(const MetricsConfig&) const = default;
};

void require_valid(const MetricsConfig& c);

/// Figures of merit of one measured drive cycle.
struct CycleMetrics {
  double v0 = 0.0;
  double freq = 0.0;
  double lrs = 0.0;           // min M over the cycle [ohm]
  double hrs = 0.0;           // max M over the cycle [ohm]
  double window_ratio = 1.0;  // hrs / lrs
  double window_diff = 0.0;   // hrs - lrs [ohm]
  double loop_area = 0.0;     // summed |lobe area| of the I-V loop [V A]
  double peak_current = 0.0;  // [A]
  double tau = 0.0;           // peak_current / i_sense
  double qphi_nonlinearity = 0.0;
  bool clipped = false;

  bool operator==(const CycleMetrics&) const = default;
};

struct ResistanceStates {
  double lrs;
  double hrs;
};

// Min/max of the state-derived memristance over the final period.
ResistanceStates extract_lrs_hrs(const SimTrace& trace);

struct MemoryWindow {
  double ratio;
  double diff;
};

MemoryWindow memory_window(double lrs, double hrs);

/// A point where V changes sign along the final-period I-V curve, with the
/// current linearly interpolated to V = 0.
struct ZeroCrossing {
  std::size_t edge;  // crossing lies between samples edge and edge + 1 (cyclic)
  double t;
  double i;
};

// Crossings of V through zero over the final period, treated as a closed
// cycle. Sign convention: V >= 0 counts as positive.
std::vector<ZeroCrossing> voltage_zero_crossings(const SimTrace& trace);

/// Area enclosed by the pinched I-V loop of the final period.
///
/// The cycle is cut into lobes at the zero crossings of V; each lobe is closed
/// through its two interpolated crossing points and measured with the shoelace
/// formula. Returns the sum of absolute lobe areas. Throws InvalidArgument if
/// a lobe has fewer than three points.
double loop_area(const SimTrace& trace);

double peak_current(const SimTrace& trace);

double lifetime_margin(double peak, const MetricsConfig& cfg);

/// 1 - R^2 of the least-squares line q = a phi + b over the final period,
/// clamped to [0, 1]. Throws DegenerateFit when phi has no spread.
double qphi_nonlinearity(const SimTrace& trace);

// Aggregates all of the above. A cycle with constant flux (null drive) is
// trivially linear and reports qphi_nonlinearity = 0.
CycleMetrics cycle_metrics(const SimTrace& trace, const MetricsConfig& cfg);

}  // namespace memdrift
