#include "memdrift/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <optional>
#include <ostream>
#include <sstream>

#include "memdrift/analytic_oracle.hpp"
#include "memdrift/config.hpp"
#include "memdrift/csv.hpp"
#include "memdrift/errors.hpp"
#include "memdrift/plot_data.hpp"

namespace fs = std::filesystem;

namespace memdrift {

namespace {

struct Flags {
  std::optional<double> amplitude;
  std::optional<double> frequency;
  std::optional<int> periods;
  std::optional<int> steps_per_period;
  std::optional<int> settle_periods;
  std::optional<std::string> amplitudes;
  std::optional<std::string> frequencies;
  std::optional<std::string> config;
  std::optional<std::string> out;
  std::optional<double> i_sense;
  std::optional<int> threads;
  bool emit_plot_data = false;
};

void add_common(CLI::App& sub, Flags& f) {
  sub.add_option("--steps-per-period", f.steps_per_period, "RK4 steps per drive period (>= 100)");
  sub.add_option("--settle-periods", f.settle_periods, "Periods simulated before the measured one");
  sub.add_option("--config", f.config, "Key-value config file");
  sub.add_option("--i-sense", f.i_sense, "Sense-amplifier threshold current [A]");
}

void add_drive(CLI::App& sub, Flags& f) {
  sub.add_option("--amplitude", f.amplitude, "Write amplitude [V]");
  sub.add_option("--frequency", f.frequency, "Drive frequency [Hz]");
  sub.add_option("--periods", f.periods, "Measured drive periods");
}

struct Cli {
  CLI::App app{"Linear-drift memristor simulator and RRAM metrics", "memdrift"};
  CLI::App* run = nullptr;
  CLI::App* sweep = nullptr;
  CLI::App* verify = nullptr;
  Flags flags;

  Cli() {
    app.require_subcommand(1);
    run = app.add_subcommand("run", "Simulate one drive and write the trace CSV");
    sweep = app.add_subcommand("sweep", "Run the amplitude x frequency grid and write the metrics CSV");
    verify = app.add_subcommand("verify", "Compare the RK4 trace with the closed-form solution");

    for (auto* sub : {run, sweep, verify}) add_common(*sub, flags);
    add_drive(*run, flags);
    add_drive(*verify, flags);
    sweep->add_option("--amplitudes", flags.amplitudes, "Comma-separated amplitudes [V]");
    sweep->add_option("--frequencies", flags.frequencies, "Comma-separated frequencies [Hz]");
    sweep->add_option("--threads", flags.threads, "Worker threads (0 = OpenMP default)");
    for (auto* sub : {run, sweep}) {
      sub->add_option("--out", flags.out, "Output CSV path");
      sub->add_flag("--emit-plot-data", flags.emit_plot_data, "Also write per-figure CSV series next to --out");
    }
    verify->add_option("--out", flags.out, "Also write the report to this path");
  }
};

std::vector<double> list_flag(const std::string& text, const char* name) {
  try {
    return parse_number_list(text);
  } catch (const InvalidArgument& e) {
    throw UsageError(std::string("--") + name + ": " + e.what());
  }
}

template <typename F>
void as_usage(F&& fn) {
  try {
    fn();
  } catch (const InvalidArgument& e) {
    throw UsageError(e.what());
  }
}

void print_report(std::ostream& os, const OracleReport& r) {
  os << "max_abs_w_error_m=" << format_number(r.max_abs_w_error) << '\n'
     << "max_rel_i_error=" << format_number(r.max_rel_i_error) << '\n'
     << "rms_rel_m_error=" << format_number(r.rms_rel_m_error) << '\n'
     << "valid=" << (r.valid ? "true" : "false") << '\n';
}

void print_metrics(std::ostream& os, const CycleMetrics& m) {
  os << "v0_V=" << format_number(m.v0) << '\n'
     << "freq_Hz=" << format_number(m.freq) << '\n'
     << "lrs_ohm=" << format_number(m.lrs) << '\n'
     << "hrs_ohm=" << format_number(m.hrs) << '\n'
     << "window_ratio=" << format_number(m.window_ratio) << '\n'
     << "window_diff_ohm=" << format_number(m.window_diff) << '\n'
     << "loop_area_VA=" << format_number(m.loop_area) << '\n'
     << "peak_current_A=" << format_number(m.peak_current) << '\n'
     << "tau=" << format_number(m.tau) << '\n'
     << "qphi_nonlinearity=" << format_number(m.qphi_nonlinearity) << '\n'
     << "clipped=" << (m.clipped ? "true" : "false") << '\n';
}

fs::path plot_dir(const fs::path& out) {
  return out.has_parent_path() ? out.parent_path() : fs::path(".");
}

int run_verify(const RunSpec& spec, std::ostream& out, std::ostream& err) {
  DriveWaveform full = spec.drive;
  full.periods += spec.sim.settle_periods;
  try {
    require_oracle_valid(spec.device, full);
  } catch (const OracleInvalid& e) {
    err << "verify: " << e.what() << " (clip flux threshold "
        << format_number(clip_flux_threshold(spec.device)) << " V s)\n";
    return kExitVerify;
  }

  const auto numeric = simulate(spec.device, spec.drive, spec.sim);
  const auto exact = analytic_trace(spec.device, full, spec.sim.steps_per_period);
  const auto report = compare_traces(numeric, exact);

  std::ostringstream text;
  print_report(text, report);
  const bool pass = report.valid && report.max_abs_w_error < 1e-6 * spec.device.D &&
                    report.max_rel_i_error < 1e-6;
  text << "result=" << (pass ? "pass" : "fail") << '\n';
  out << text.str();
  if (!spec.out_path.empty()) write_text_file(spec.out_path, text.str());
  return pass ? kExitOk : kExitVerify;
}

}  // namespace

std::string usage() { return Cli{}.app.help(); }

RunSpec parse_cli(const std::vector<std::string>& args) {
  Cli cli;
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    cli.app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }
  const Flags& f = cli.flags;

  RunSpec spec;
  if (cli.run->parsed()) spec.command = Command::run;
  else if (cli.sweep->parsed()) spec.command = Command::sweep;
  else spec.command = Command::verify;

  std::vector<double> amplitudes = default_amplitudes();
  std::vector<double> frequencies = default_frequencies();
  if (f.config) {
    const auto cfg = load_config(*f.config);
    cfg.apply_to(spec.device);
    cfg.apply_to(spec.sim);
    cfg.apply_to(spec.metrics_cfg);
    if (cfg.amplitudes_v) amplitudes = *cfg.amplitudes_v;
    if (cfg.frequencies_hz) frequencies = *cfg.frequencies_hz;
  }

  if (f.steps_per_period) spec.sim.steps_per_period = *f.steps_per_period;
  if (f.settle_periods) spec.sim.settle_periods = *f.settle_periods;
  if (f.i_sense) spec.metrics_cfg.i_sense = *f.i_sense;
  if (f.amplitudes) amplitudes = list_flag(*f.amplitudes, "amplitudes");
  if (f.frequencies) frequencies = list_flag(*f.frequencies, "frequencies");
  if (f.amplitude) spec.drive.v0 = *f.amplitude;
  if (f.frequency) spec.drive.freq = *f.frequency;
  if (f.periods) spec.drive.periods = *f.periods;
  if (f.out) spec.out_path = *f.out;
  if (f.threads) spec.threads = *f.threads;
  spec.emit_plot_data = f.emit_plot_data;

  as_usage([&] { require_valid(spec.device); });
  as_usage([&] { require_valid(spec.sim); });
  as_usage([&] { require_valid(spec.metrics_cfg); });
  if (spec.command == Command::sweep) {
    as_usage([&] { spec.grid = build_grid(amplitudes, frequencies); });
    if (spec.threads < 0) throw UsageError("threads must be non-negative");
  } else {
    if (!(spec.drive.freq > 0)) throw UsageError("frequency must be positive");
    if (!(spec.drive.v0 >= 0)) throw UsageError("amplitude must be non-negative");
    as_usage([&] { require_valid(spec.drive); });
  }
  if (spec.command != Command::verify && spec.out_path.empty()) throw UsageError("--out is required");
  return spec;
}

int execute(const RunSpec& spec, std::ostream& out, std::ostream& err) {
  switch (spec.command) {
    case Command::run: {
      const auto trace = simulate(spec.device, spec.drive, spec.sim);
      write_trace_csv(trace, spec.out_path);
      if (spec.emit_plot_data) emit_plot_data(trace, plot_dir(spec.out_path));
      print_metrics(out, cycle_metrics(trace, spec.metrics_cfg));
      return kExitOk;
    }
    case Command::sweep: {
      const auto result = run_sweep(spec.device, spec.grid, spec.sim, spec.metrics_cfg, spec.threads);
      write_metrics_csv(result, spec.out_path);
      if (spec.emit_plot_data) emit_plot_data(result, plot_dir(spec.out_path));
      const auto ranking = rank_lifetime(result);
      out << "cells=" << result.cells.size() << '\n'
          << "best_lifetime=v0_V:" << format_number(ranking.front().v0)
          << ",freq_Hz:" << format_number(ranking.front().freq) << ",tau:" << format_number(ranking.front().tau)
          << '\n';
      return kExitOk;
    }
    case Command::verify:
      return run_verify(spec, out, err);
  }
  return kExitRuntime;
}

int run_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  if (args.empty() || std::find(args.begin(), args.end(), "--help") != args.end() ||
      std::find(args.begin(), args.end(), "-h") != args.end()) {
    out << usage();
    return args.empty() ? kExitUsage : kExitOk;
  }
  RunSpec spec;
  try {
    spec = parse_cli(args);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitRuntime;
  }

  try {
    return execute(spec, out, err);
  } catch (const OracleInvalid& e) {
    err << "verify: " << e.what() << '\n';
    return kExitVerify;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitRuntime;
  }
}

}  // namespace memdrift
