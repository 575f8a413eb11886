#include "memdrift/plot_data.hpp"

#include <cmath>
#include <system_error>

#include "memdrift/csv.hpp"
#include "memdrift/errors.hpp"

namespace fs = std::filesystem;

namespace memdrift {

namespace {

void ensure_dir(const fs::path& dir) {
  if (dir.empty()) return;
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw IoError(dir.string(), "cannot create directory: " + ec.message());
}

void row(std::string& out, std::initializer_list<double> fields) {
  bool first = true;
  for (double f : fields) {
    if (!first) out += ',';
    first = false;
    out += format_number(f);
  }
  out += '\n';
}

}  // namespace

std::string series_tag(double v0, double freq) {
  return "v0=" + format_number(v0) + "_f=" + format_number(freq);
}

std::vector<fs::path> emit_plot_data(const SimTrace& trace, const fs::path& out_dir) {
  ensure_dir(out_dir);
  const auto cycle = final_period(trace);
  const auto tag = series_tag(trace.drive.v0, trace.drive.freq);

  std::string phl = "v_V,i_A\n";
  std::string qphi = "phi_Vs,q_C\n";
  std::string semilog = "v_V,abs_i_A\n";
  std::string current = "t_s,i_A\n";
  for (const auto& s : cycle) {
    row(phl, {s.v, s.i});
    row(qphi, {s.phi, s.q});
    row(semilog, {s.v, std::abs(s.i)});
    row(current, {s.t, s.i});
  }

  std::vector<fs::path> written{
      out_dir / ("fig1_phl_" + tag + ".csv"),
      out_dir / ("fig2_qphi_" + tag + ".csv"),
      out_dir / ("fig3_semilog_" + tag + ".csv"),
      out_dir / ("fig6_current_" + tag + ".csv"),
  };
  write_text_file(written[0], phl);
  write_text_file(written[1], qphi);
  write_text_file(written[2], semilog);
  write_text_file(written[3], current);
  return written;
}

std::vector<fs::path> emit_plot_data(const SweepResult& result, const fs::path& out_dir) {
  ensure_dir(out_dir);
  const auto& g = result.grid;
  std::vector<fs::path> written;

  std::string window = "freq_Hz,v0_V,window_ratio,window_diff_ohm\n";
  std::string peak = "freq_Hz,v0_V,peak_current_A,tau\n";
  for (std::size_t col = 0; col < g.cols(); ++col) {
    std::string states = "v0_V,lrs_ohm,hrs_ohm\n";
    for (std::size_t r = 0; r < g.rows(); ++r) {
      const auto& c = result.at(r, col);
      row(window, {c.freq, c.v0, c.window_ratio, c.window_diff});
      row(peak, {c.freq, c.v0, c.peak_current, c.tau});
      row(states, {c.v0, c.lrs, c.hrs});
    }
    written.push_back(out_dir / ("fig5_lrs_hrs_f=" + format_number(g.frequencies[col]) + ".csv"));
    write_text_file(written.back(), states);
  }
  written.insert(written.begin(), out_dir / "fig4_window.csv");
  write_text_file(written.front(), window);
  written.push_back(out_dir / "fig6_peak_current.csv");
  write_text_file(written.back(), peak);
  return written;
}

}  // namespace memdrift
