#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "memdrift/integrator.hpp"
#include "memdrift/metrics.hpp"
#include "memdrift/sweep.hpp"

namespace memdrift {

inline constexpr std::string_view kTraceHeader = "t_s,v_V,i_A,w_m,m_ohm,q_C,phi_Vs";
inline constexpr std::string_view kMetricsHeader =
    "v0_V,freq_Hz,lrs_ohm,hrs_ohm,window_ratio,window_diff_ohm,loop_area_VA,peak_current_A,tau,"
    "qphi_nonlinearity,clipped";

// Shortest decimal or scientific text that parses back to exactly x.
std::string format_number(double x);

// Parses the whole token as a double; throws InvalidArgument otherwise.
double parse_number(std::string_view token);

std::string trace_csv(const SimTrace& trace);
std::string metrics_csv(const SweepResult& result);

// Writes contents to path, replacing any existing file. Throws IoError.
void write_text_file(const std::filesystem::path& path, std::string_view contents);

void write_trace_csv(const SimTrace& trace, const std::filesystem::path& path);
void write_metrics_csv(const SweepResult& result, const std::filesystem::path& path);

std::vector<Sample> read_trace_csv(const std::filesystem::path& path);
std::vector<CycleMetrics> read_metrics_csv(const std::filesystem::path& path);

}  // namespace memdrift
