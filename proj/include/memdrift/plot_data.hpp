#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "memdrift/integrator.hpp"
#include "memdrift/sweep.hpp"

namespace memdrift {

/// Plot-ready CSV series, one file per figure series.
///
/// For a single run (final period only):
///   fig1_phl_v0=<V>_f=<Hz>.csv       v_V,i_A
///   fig2_qphi_v0=<V>_f=<Hz>.csv      phi_Vs,q_C
///   fig3_semilog_v0=<V>_f=<Hz>.csv   v_V,abs_i_A
///   fig6_current_v0=<V>_f=<Hz>.csv   t_s,i_A
/// For a sweep:
///   fig4_window.csv                  freq_Hz,v0_V,window_ratio,window_diff_ohm
///   fig5_lrs_hrs_f=<Hz>.csv          v0_V,lrs_ohm,hrs_ohm
///   fig6_peak_current.csv            freq_Hz,v0_V,peak_current_A,tau
///
/// Creates out_dir if needed and returns the written paths in write order.
std::vector<std::filesystem::path> emit_plot_data(const SimTrace& trace, const std::filesystem::path& out_dir);
std::vector<std::filesystem::path> emit_plot_data(const SweepResult& result, const std::filesystem::path& out_dir);

// "v0=0.4_f=1" style tag used in file names.
std::string series_tag(double v0, double freq);

}  // namespace memdrift
