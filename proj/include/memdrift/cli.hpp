#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "memdrift/device_model.hpp"
#include "memdrift/integrator.hpp"
#include "memdrift/metrics.hpp"
#include "memdrift/sweep.hpp"
#include "memdrift/waveform.hpp"

namespace memdrift {

enum class Command { run, sweep, verify };

inline constexpr int kExitOk = 0;
inline constexpr int kExitRuntime = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitVerify = 3;

/// Fully resolved invocation: built-in defaults, then the config file, then flags.
struct RunSpec {
  Command command = Command::run;
  DeviceParams device;
  DriveWaveform drive;  // run / verify
  SweepGrid grid;       // sweep
  SimConfig sim;
  MetricsConfig metrics_cfg;
  std::filesystem::path out_path;  // optional for verify
  bool emit_plot_data = false;
  int threads = 0;  // sweep workers, 0 = OpenMP default
};

// args excludes the program name. Throws UsageError (unknown flag, malformed
// number, missing or invalid value) or ConfigError / IoError from --config.
RunSpec parse_cli(const std::vector<std::string>& args);

// Usage text for the whole tool.
std::string usage();

// Runs a parsed command. Library exceptions propagate.
int execute(const RunSpec& spec, std::ostream& out, std::ostream& err);

// parse_cli + execute with the exit-status convention: 0 success, 2 usage
// error, 3 verification failure, 1 anything else.
int run_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace memdrift
