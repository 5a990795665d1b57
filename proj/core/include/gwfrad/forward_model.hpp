#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>

#include "gwfrad/geometry.hpp"
#include "gwfrad/spectral.hpp"

namespace gwfrad {

/// compensated: geometric amplitudes divided out, every entry has unit
/// modulus (alpha_{i,j} = 1, the regime assumed by the isometry analysis).
/// physical: entry modulus C / (|x - a_i^r| * |x - a^t|) with C = 1.
enum class AmplitudeMode { compensated, physical };

/// exact: true bistatic ranges.  farfield: |a_i^r| + |a^t| - <a_i^r_hat +
/// a^t_hat, x>, the small-scene linearization the closed-form analysis is
/// derived under.
enum class PhaseMode { exact, farfield };

/// Total transmitter -> point -> receiver path length |x - a_i^r| + |x - a^t|.
double bistatic_phase(const Eigen::Vector3d& x, const Geometry& geometry, int receiver);

/// Far-field linearization of the bistatic phase about the scene center.
double farfield_bistatic_phase(const Eigen::Vector3d& x, const Geometry& geometry, int receiver);

/// The measurement vectors L_i^m with entries
///   L_i^m[k] = exp(-i * omega_m * phi_i(x_k) / c0) * A_i(x_k),
/// stored as a K x (N*M) matrix, column i*M + m.  The per-receiver data are
/// <L_i^m, rho> with the inner product conjugate-linear in the first slot.
class MeasurementVectors {
public:
  static MeasurementVectors build(const SceneGrid& grid, const Geometry& geometry,
                                  const SpectralGrid& spectral,
                                  AmplitudeMode amplitude_mode = AmplitudeMode::compensated,
                                  PhaseMode phase_mode = PhaseMode::exact);

  int scene_size() const { return static_cast<int>(matrix_.rows()); }        // K
  int receiver_count() const { return receiver_count_; }                     // N
  int frequency_count() const { return frequency_count_; }                   // M
  AmplitudeMode amplitude_mode() const { return amplitude_mode_; }
  PhaseMode phase_mode() const { return phase_mode_; }

  int column(int receiver, int freq) const { return receiver * frequency_count_ + freq; }
  const Eigen::MatrixXcd& matrix() const { return matrix_; }

  /// <L_i^m, rho> for every (i, m), laid out like the columns.
  Eigen::VectorXcd linear_terms(const Eigen::VectorXd& rho) const;

private:
  Eigen::MatrixXcd matrix_;
  int receiver_count_ = 0;
  int frequency_count_ = 0;
  AmplitudeMode amplitude_mode_ = AmplitudeMode::compensated;
  PhaseMode phase_mode_ = PhaseMode::exact;
};

/// Per-receiver frequency-domain samples, d_i(omega_m) at (row i, column m).
struct ReceiverData {
  Eigen::MatrixXcd values;  // N x M

  int receiver_count() const { return static_cast<int>(values.rows()); }
  int frequency_count() const { return static_cast<int>(values.cols()); }
};

/// d_i(omega_m) = <L_i^m, rho>.
ReceiverData simulate_receiver_data(const Eigen::VectorXd& rho, const MeasurementVectors& vectors);

/// Circularly-symmetric complex Gaussian noise with per-receiver variance
///   sigma_i^2 = (1/M) sum_m |d_i(omega_m)|^2 / 10^(snr_db/10).
/// snr_db = +infinity is the noiseless sentinel (data returned unchanged).
/// Deterministic given the seed.  Throws NumericalError on an all-zero
/// receiver row (SNR undefined).
ReceiverData add_receiver_noise(const ReceiverData& data, double snr_db, std::uint64_t seed);

/// Stacked cross-correlations d_i(omega_m) * conj(d_j(omega_m)) over pairs
/// i < j (lexicographic), frequencies contiguous per pair, scaled by
/// 1/sqrt(M * C(N,2)).
struct InterferometricData {
  Eigen::VectorXcd values;
  int receiver_count = 0;
  int frequency_count = 0;
  double scale = 0.0;  // the applied global factor

  int pair_count() const { return receiver_count * (receiver_count - 1) / 2; }
  int size() const { return static_cast<int>(values.size()); }

  /// Index of the (i, j) pair, 0-based i < j.
  static int pair_index(int i, int j, int receivers);
  std::complex<double> entry(int i, int j, int m) const;
};

double interferometric_scale(int receivers, int frequencies);

InterferometricData cross_correlate(const ReceiverData& data);

}  // namespace gwfrad
