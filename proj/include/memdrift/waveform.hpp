#pragma once

namespace memdrift {

/// Sinusoidal write drive V(t) = v0 sin(2 pi freq t + phase).
struct DriveWaveform {
  double v0 = 0.2;     // amplitude [V]
  double freq = 1.0;   // [Hz]
  double phase = 0.0;  // [rad]
  int periods = 1;

  double period() const noexcept { return 1.0 / freq; }
  bool operator==(const DriveWaveform&) const = default;
};

// Throws InvalidArgument unless v0 >= 0, freq > 0 and periods >= 1.
void require_valid(const DriveWaveform& d);

double voltage_at(const DriveWaveform& d, double t) noexcept;

/// Exact flux phi(t) = integral of V from 0 to t [V s]. For phase 0 this is
/// v0 (1 - cos(2 pi f t)) / (2 pi f): non-negative, zero at every full period.
double flux_at(const DriveWaveform& d, double t) noexcept;

struct FluxRange {
  double min;
  double max;
};

// Range of flux_at over all t >= 0.
FluxRange flux_range(const DriveWaveform& d) noexcept;

}  // namespace memdrift
