#include "memdrift/csv.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <sstream>

#include "memdrift/errors.hpp"

namespace memdrift {

std::string format_number(double x) {
  std::array<char, 32> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  return std::string(buf.data(), res.ptr);
}

double parse_number(std::string_view token) {
  double x = 0.0;
  const char* end = token.data() + token.size();
  const auto res = std::from_chars(token.data(), end, x);
  if (res.ec != std::errc{} || res.ptr != end || token.empty()) {
    throw InvalidArgument("malformed number '" + std::string(token) + "'");
  }
  return x;
}

namespace {

template <typename... Ts>
void append_row(std::string& out, const Ts&... fields) {
  bool first = true;
  auto put = [&](const auto& f) {
    if (!first) out += ',';
    first = false;
    if constexpr (std::is_same_v<std::decay_t<decltype(f)>, bool>) {
      out += f ? "true" : "false";
    } else {
      out += format_number(f);
    }
  };
  (put(fields), ...);
  out += '\n';
}

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = line.find(sep, start);
    out.push_back(line.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::vector<std::string> read_lines(const std::filesystem::path& path, std::string_view header) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError(path.string(), "cannot open for reading");
  std::vector<std::string> lines;
  std::string line;
  if (!std::getline(in, line) || line != header) throw IoError(path.string(), "unexpected CSV header");
  while (std::getline(in, line)) {
    if (!line.empty()) lines.push_back(line);
  }
  return lines;
}

}  // namespace

std::string trace_csv(const SimTrace& trace) {
  std::string out(kTraceHeader);
  out += '\n';
  for (const auto& s : trace.samples) append_row(out, s.t, s.v, s.i, s.w, s.m, s.q, s.phi);
  return out;
}

std::string metrics_csv(const SweepResult& result) {
  std::string out(kMetricsHeader);
  out += '\n';
  for (const auto& c : result.cells) {
    append_row(out, c.v0, c.freq, c.lrs, c.hrs, c.window_ratio, c.window_diff, c.loop_area, c.peak_current,
               c.tau, c.qphi_nonlinearity, c.clipped);
  }
  return out;
}

void write_text_file(const std::filesystem::path& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError(path.string(), "cannot open for writing");
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  out.flush();
  if (!out) throw IoError(path.string(), "write failed");
}

void write_trace_csv(const SimTrace& trace, const std::filesystem::path& path) {
  write_text_file(path, trace_csv(trace));
}

void write_metrics_csv(const SweepResult& result, const std::filesystem::path& path) {
  write_text_file(path, metrics_csv(result));
}

std::vector<Sample> read_trace_csv(const std::filesystem::path& path) {
  std::vector<Sample> out;
  for (const auto& line : read_lines(path, kTraceHeader)) {
    const auto f = split(line, ',');
    if (f.size() != 7) throw IoError(path.string(), "expected 7 fields in '" + line + "'");
    out.push_back({parse_number(f[0]), parse_number(f[1]), parse_number(f[2]), parse_number(f[3]),
                   parse_number(f[4]), parse_number(f[5]), parse_number(f[6])});
  }
  return out;
}

std::vector<CycleMetrics> read_metrics_csv(const std::filesystem::path& path) {
  std::vector<CycleMetrics> out;
  for (const auto& line : read_lines(path, kMetricsHeader)) {
    const auto f = split(line, ',');
    if (f.size() != 11) throw IoError(path.string(), "expected 11 fields in '" + line + "'");
    if (f[10] != "true" && f[10] != "false") throw IoError(path.string(), "bad clipped flag in '" + line + "'");
    CycleMetrics c;
    c.v0 = parse_number(f[0]);
    c.freq = parse_number(f[1]);
    c.lrs = parse_number(f[2]);
    c.hrs = parse_number(f[3]);
    c.window_ratio = parse_number(f[4]);
    c.window_diff = parse_number(f[5]);
    c.loop_area = parse_number(f[6]);
    c.peak_current = parse_number(f[7]);
    c.tau = parse_number(f[8]);
    c.qphi_nonlinearity = parse_number(f[9]);
    c.clipped = f[10] == "true";
    out.push_back(c);
  }
  return out;
}

}  // namespace memdrift
