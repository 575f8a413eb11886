#include "memdrift/config.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <string>

#include "memdrift/csv.hpp"
#include "memdrift/errors.hpp"

namespace memdrift {

namespace {

std::string_view trim(std::string_view s) {
  const auto* ws = " \t\r\n";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

double parse_signed(std::string_view s) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return parse_number(s);
}

int parse_int(std::string_view s) {
  const double x = parse_signed(s);
  if (std::trunc(x) != x || std::abs(x) > 1e9) throw InvalidArgument("expected an integer, got '" + std::string(trim(s)) + "'");
  return static_cast<int>(x);
}

}  // namespace

std::vector<double> parse_number_list(std::string_view text) {
  std::vector<double> out;
  if (trim(text).empty()) return out;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(',', start);
    out.push_back(parse_signed(text.substr(start, pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

void ConfigOverrides::apply_to(DeviceParams& device) const {
  if (D_nm) device.D = *D_nm * 1e-9;
  if (w0_nm) device.w0 = *w0_nm * 1e-9;
  if (r_on_ohm) device.r_on = *r_on_ohm;
  if (r_off_ohm) device.r_off = *r_off_ohm;
  if (mu_v) device.mu_v = *mu_v;
  if (eta) device.eta = *eta;
}

void ConfigOverrides::apply_to(SimConfig& sim) const {
  if (steps_per_period) sim.steps_per_period = *steps_per_period;
  if (settle_periods) sim.settle_periods = *settle_periods;
}

void ConfigOverrides::apply_to(MetricsConfig& metrics) const {
  if (i_sense_amp) metrics.i_sense = *i_sense_amp;
}

ConfigOverrides parse_config(std::string_view text) {
  ConfigOverrides cfg;
  using Setter = std::function<void(std::string_view)>;
  const std::map<std::string, Setter, std::less<>> setters{
      {"device.D_nm", [&](auto v) { cfg.D_nm = parse_signed(v); }},
      {"device.w0_nm", [&](auto v) { cfg.w0_nm = parse_signed(v); }},
      {"device.r_on_ohm", [&](auto v) { cfg.r_on_ohm = parse_signed(v); }},
      {"device.r_off_ohm", [&](auto v) { cfg.r_off_ohm = parse_signed(v); }},
      {"device.mu_v", [&](auto v) { cfg.mu_v = parse_signed(v); }},
      {"device.eta",
       [&](auto v) {
         const int eta = parse_int(v);
         if (eta != 1 && eta != -1) throw InvalidArgument("eta must be +1 or -1");
         cfg.eta = eta;
       }},
      {"sim.steps_per_period", [&](auto v) { cfg.steps_per_period = parse_int(v); }},
      {"sim.settle_periods", [&](auto v) { cfg.settle_periods = parse_int(v); }},
      {"metrics.i_sense_amp", [&](auto v) { cfg.i_sense_amp = parse_signed(v); }},
      {"grid.amplitudes_v", [&](auto v) { cfg.amplitudes_v = parse_number_list(v); }},
      {"grid.frequencies_hz", [&](auto v) { cfg.frequencies_hz = parse_number_list(v); }},
  };

  std::istringstream in{std::string(text)};
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string_view line = raw;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw ConfigError("expected 'key = value'", lineno);
    const auto key = trim(line.substr(0, eq));
    const auto value = trim(line.substr(eq + 1));
    const auto it = setters.find(key);
    if (it == setters.end()) throw ConfigError("unknown key '" + std::string(key) + "'", lineno);
    if (value.empty()) throw ConfigError("missing value for '" + std::string(key) + "'", lineno);
    try {
      it->second(value);
    } catch (const InvalidArgument& e) {
      throw ConfigError(std::string(key) + ": " + e.what(), lineno);
    }
  }
  return cfg;
}

ConfigOverrides load_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError(path.string(), "cannot open config file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

}  // namespace memdrift
