#include "memdrift/sweep.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <exception>
#include <sstream>
#include <string>

namespace memdrift {

const std::vector<double>& default_amplitudes() {
  static const std::vector<double> v{0.2, 0.4, 0.6, 0.8, 1.0, 1.2};
  return v;
}

const std::vector<double>& default_frequencies() {
  static const std::vector<double> v{1.0, 2.0, 4.0, 10.0, 100.0, 200.0};
  return v;
}

namespace {

void check_axis(const std::vector<double>& axis, const char* name) {
  if (axis.empty()) throw InvalidArgument(std::string(name) + " must be non-empty");
  for (std::size_t k = 0; k < axis.size(); ++k) {
    if (!(std::isfinite(axis[k]) && axis[k] > 0)) {
      throw InvalidArgument(std::string(name) + ": non-positive entry at index " + std::to_string(k));
    }
    if (k > 0 && !(axis[k] > axis[k - 1])) {
      throw InvalidArgument(std::string(name) + ": not strictly increasing at index " + std::to_string(k));
    }
  }
}

std::string coordinates(double v0, double freq) {
  std::ostringstream os;
  os << "cell (v0=" << v0 << " V, f=" << freq << " Hz)";
  return os.str();
}

SweepResult empty_result(const DeviceParams& device, const SweepGrid& grid, const SimConfig& sim,
                         const MetricsConfig& mcfg) {
  require_valid(device);
  require_valid(sim);
  require_valid(mcfg);
  check_axis(grid.amplitudes, "amplitudes");
  check_axis(grid.frequencies, "frequencies");
  SweepResult r{grid, device, sim, mcfg, {}};
  r.cells.resize(grid.rows() * grid.cols());
  return r;
}

}  // namespace

SweepGrid build_grid(std::vector<double> amplitudes, std::vector<double> frequencies) {
  check_axis(amplitudes, "amplitudes");
  check_axis(frequencies, "frequencies");
  return {std::move(amplitudes), std::move(frequencies)};
}

SweepError::SweepError(double v0, double freq, const std::string& what)
    : Error(coordinates(v0, freq) + ": " + what), v0_(v0), freq_(freq) {}

CycleMetrics run_cell(const DeviceParams& device, double v0, double freq, const SimConfig& sim,
                      const MetricsConfig& mcfg) {
  const DriveWaveform drive{v0, freq, 0.0, 1};
  return cycle_metrics(simulate(device, drive, sim), mcfg);
}

SweepResult run_sweep(const DeviceParams& device, const SweepGrid& grid, const SimConfig& sim,
                      const MetricsConfig& mcfg, int threads) {
  SweepResult r = empty_result(device, grid, sim, mcfg);
  const auto n = static_cast<std::ptrdiff_t>(r.cells.size());
  const std::size_t cols = grid.cols();
  std::vector<std::exception_ptr> failures(r.cells.size());
  const int nthreads = threads > 0 ? threads : omp_get_max_threads();

#pragma omp parallel for schedule(dynamic, 1) num_threads(nthreads)
  for (std::ptrdiff_t idx = 0; idx < n; ++idx) {
    const auto u = static_cast<std::size_t>(idx);
    try {
      r.cells[u] = run_cell(device, grid.amplitudes[u / cols], grid.frequencies[u % cols], sim, mcfg);
    } catch (...) {
      failures[u] = std::current_exception();
    }
  }

  for (std::size_t u = 0; u < failures.size(); ++u) {
    if (!failures[u]) continue;
    try {
      std::rethrow_exception(failures[u]);
    } catch (const std::exception& e) {
      throw SweepError(grid.amplitudes[u / cols], grid.frequencies[u % cols], e.what());
    }
  }
  return r;
}

SweepResult run_sweep_serial(const DeviceParams& device, const SweepGrid& grid, const SimConfig& sim,
                             const MetricsConfig& mcfg) {
  SweepResult r = empty_result(device, grid, sim, mcfg);
  for (std::size_t row = 0; row < grid.rows(); ++row) {
    for (std::size_t col = 0; col < grid.cols(); ++col) {
      const double v0 = grid.amplitudes[row];
      const double f = grid.frequencies[col];
      try {
        r.cells[row * grid.cols() + col] = run_cell(device, v0, f, sim, mcfg);
      } catch (const std::exception& e) {
        throw SweepError(v0, f, e.what());
      }
    }
  }
  return r;
}

std::vector<LifetimeEntry> rank_lifetime(const SweepResult& result) {
  std::vector<LifetimeEntry> out;
  out.reserve(result.cells.size());
  for (const auto& c : result.cells) out.push_back({c.v0, c.freq, c.tau});
  std::sort(out.begin(), out.end(), [](const LifetimeEntry& a, const LifetimeEntry& b) {
    if (a.tau != b.tau) return a.tau > b.tau;
    if (a.v0 != b.v0) return a.v0 > b.v0;
    return a.freq < b.freq;
  });
  return out;
}

}  // namespace memdrift
