#pragma once

#include <vector>

namespace gwfrad {

inline constexpr double speed_of_light = 299792458.0;  // m/s
inline constexpr double pi = 3.141592653589793238462643383279502884;

class SpectralError;

/// Uniform sampling of the transmit band in angular frequency.
///
/// The band [omega_c - B/2, omega_c + B/2] is sampled at M points
///   omega_m = omega_c - B/2 + (m/M) * B,   m = 0..M-1,
/// so the first sample sits exactly at the lower band edge and the last at
/// omega_c + B/2 - B/M.  The shifted center omega_c' = omega_c - B/(2M) is
/// the midpoint of the sampled comb and is the frequency entering the band
/// kernel and the wavelength definition used by the bound calculators.
class SpectralGrid {
public:
  /// center and bandwidth in rad/s; requires M >= 1, 0 < B < 2*center.
  SpectralGrid(double center, double bandwidth, int sample_count);

  /// Convenience constructor from Hz (omega = 2*pi*f).
  static SpectralGrid from_hz(double center_hz, double bandwidth_hz, int sample_count);

  double center() const { return center_; }
  double bandwidth() const { return bandwidth_; }
  int sample_count() const { return sample_count_; }

  double shifted_center() const;  // omega_c' [rad/s]
  double sample(int m) const;     // omega_m, m is 0-based
  const std::vector<double>& samples() const { return samples_; }

  double center_wavelength() const;  // lambda_c = 2*pi*c0 / omega_c' [m]
  double range_resolution() const;   // Delta_res = 2*pi*c0 / (2B) [m]

private:
  double center_ = 0.0;
  double bandwidth_ = 0.0;
  int sample_count_ = 0;
  std::vector<double> samples_;
};

}  // namespace gwfrad
