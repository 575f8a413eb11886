#pragma once

#include <cstddef>
#include <vector>

#include "memdrift/device_model.hpp"
#include "memdrift/errors.hpp"
#include "memdrift/integrator.hpp"
#include "memdrift/metrics.hpp"

namespace memdrift {

struct SweepGrid {
  std::vector<double> amplitudes;   // [V]
  std::vector<double> frequencies;  // [Hz]

  std::size_t rows() const noexcept { return amplitudes.size(); }
  std::size_t cols() const noexcept { return frequencies.size(); }
  bool operator==(const SweepGrid&) const = default;
};

// 0.2 ... 1.2 V in 0.2 V steps by 1, 2, 4, 10, 100, 200 Hz.
const std::vector<double>& default_amplitudes();
const std::vector<double>& default_frequencies();

/// Validates both axes: non-empty, positive and strictly increasing. Errors
/// name the axis and the offending index.
SweepGrid build_grid(std::vector<double> amplitudes, std::vector<double> frequencies);

inline SweepGrid default_grid() { return build_grid(default_amplitudes(), default_frequencies()); }

struct SweepResult {
  SweepGrid grid;
  DeviceParams device;
  SimConfig sim;
  MetricsConfig metrics_cfg;
  std::vector<CycleMetrics> cells;  // row-major: amplitude outer, frequency inner

  const CycleMetrics& at(std::size_t row, std::size_t col) const { return cells.at(row * grid.cols() + col); }
  bool operator==(const SweepResult&) const = default;
};

class SweepError : public Error {
 public:
  SweepError(double v0, double freq, const std::string& what);
  double v0() const noexcept { return v0_; }
  double freq() const noexcept { return freq_; }

 private:
  double v0_;
  double freq_;
};

// Simulates one grid point (phase 0, settle_periods + 1 periods) and measures
// its final period.
CycleMetrics run_cell(const DeviceParams& device, double v0, double freq, const SimConfig& sim,
                      const MetricsConfig& mcfg);

/// Runs every grid cell, in parallel over cells with OpenMP.
///
/// Results are stored by grid index, so the output does not depend on the
/// schedule or on `threads` (0 keeps the OpenMP default). If any cell fails,
/// throws SweepError for the failing cell with the lowest row-major index.
SweepResult run_sweep(const DeviceParams& device, const SweepGrid& grid, const SimConfig& sim,
                      const MetricsConfig& mcfg, int threads = 0);

// Plain sequential loop over the same cells; kept as the reference that the
// parallel kernel is tested and benchmarked against.
SweepResult run_sweep_serial(const DeviceParams& device, const SweepGrid& grid, const SimConfig& sim,
                             const MetricsConfig& mcfg);

struct LifetimeEntry {
  double v0;
  double freq;
  double tau;

  bool operator==(const LifetimeEntry&) const = default;
};

// Cells by tau descending; ties go to higher v0, then lower frequency.
std::vector<LifetimeEntry> rank_lifetime(const SweepResult& result);

}  // namespace memdrift
