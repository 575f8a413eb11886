#pragma once

#include <filesystem>
#include <optional>
#include <string_view>
#include <vector>

#include "memdrift/device_model.hpp"
#include "memdrift/integrator.hpp"
#include "memdrift/metrics.hpp"

namespace memdrift {

/// Values set by a config file; unset keys leave the current value alone.
///
/// The file is flat `key = value` text. `#` starts a comment, blank lines are
/// ignored and lists are comma separated. Keys:
///
///   device.D_nm  device.w0_nm  device.r_on_ohm  device.r_off_ohm
///   device.mu_v  device.eta
///   sim.steps_per_period  sim.settle_periods
///   metrics.i_sense_amp
///   grid.amplitudes_v  grid.frequencies_hz
struct ConfigOverrides {
  std::optional<double> D_nm;
  std::optional<double> w0_nm;
  std::optional<double> r_on_ohm;
  std::optional<double> r_off_ohm;
  std::optional<double> mu_v;
  std::optional<int> eta;
  std::optional<int> steps_per_period;
  std::optional<int> settle_periods;
  std::optional<double> i_sense_amp;
  std::optional<std::vector<double>> amplitudes_v;
  std::optional<std::vector<double>> frequencies_hz;

  void apply_to(DeviceParams& device) const;
  void apply_to(SimConfig& sim) const;
  void apply_to(MetricsConfig& metrics) const;
};

// Throws ConfigError with the line number for syntax and value errors, and
// with the key name for unknown keys.
ConfigOverrides parse_config(std::string_view text);

// Throws IoError if the file cannot be read.
ConfigOverrides load_config(const std::filesystem::path& path);

// Comma-separated list of numbers; throws InvalidArgument on a bad entry.
std::vector<double> parse_number_list(std::string_view text);

}  // namespace memdrift
