#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>

#include "gwfrad/forward_model.hpp"
#include "gwfrad/geometry.hpp"
#include "gwfrad/lifted_operator.hpp"
#include "gwfrad/spectral.hpp"

namespace gwfrad {

/// Exact recovery is guaranteed for a rank-1 PSD restricted isometry
/// constant below this threshold.
inline constexpr double ric_threshold = 0.214;

/// Far-field phase difference (meters) entering the band kernel:
///   <a_i_hat, x_k - x_k'> - <a_j_hat, x_l - x_l'> + <a_t_hat, x_k - x_k' - x_l + x_l'>.
/// Indices are 0-based.
double farfield_phase(int i, int j, int k, int kp, int l, int lp,
                      const Geometry& geometry, const SceneGrid& grid);

/// Band-averaging kernel
///   K(Phi) = [sin((w_c'+B/2) Phi/c0) - sin((w_c'-B/2) Phi/c0)] / (B Phi / c0),
/// with K(0) = 1 handled analytically.  Equals cos(w_c' Phi/c0) *
/// sinc(B Phi / (2 c0)).
double band_kernel(double phi, const SpectralGrid& spectral);

/// |K(Phi)| <= 2 c0 / (B |Phi|) for Phi != 0 (and <= 1 everywhere).
double band_kernel_envelope(double phi, const SpectralGrid& spectral);

struct GeometricSum {
  std::complex<double> dirichlet;    // exact (1/M) sum_m exp(-i w_m Phi / c0)
  std::complex<double> sinc_approx;  // exp(-i w_c' Phi / c0) sinc(B Phi / (2 c0))
  double abs_error;                  // |dirichlet - sinc_approx|
};

/// Closed geometric-sum (Dirichlet) form of the frequency average and its
/// sinc approximation.
GeometricSum geometric_sum(double phi, const SpectralGrid& spectral);

/// Closed-form norm identity for far-field, amplitude-compensated data:
///   ||rho rho^T||_F^2 + (1/C(N,2)) sum_{i<j} W_{i,j},
/// where W sums K(Phi) * rho_k rho_k' * rho_l' rho_l over every pixel
/// quadruple except the joint diagonal (k = k' and l = l').  Quadruple sum,
/// O(K^4 N^2); throws NumericalError above `budget` kernel evaluations.
double lemma1_norm(const Eigen::VectorXd& rho, const Geometry& geometry,
                   const SceneGrid& grid, const SpectralGrid& spectral,
                   std::uint64_t budget = 200'000'000);

/// Inputs to the closed-form bound calculators; only meaningful for arc
/// geometries.
struct BoundInputs {
  double center_wavelength = 0.0;  // lambda_c at the shifted center [m]
  double range_resolution = 0.0;   // Delta_res [m]
  double side_length = 0.0;        // L [m]
  double pixel_spacing = 0.0;      // Delta [m]
  int scene_size = 0;              // K
  int receiver_count = 0;          // N
  double aperture = 0.0;           // A [rad]
  double elevation = 0.0;          // phi [rad]

  static BoundInputs from(const Geometry& geometry, const SceneGrid& grid,
                          const SpectralGrid& spectral);
};

struct RicBound {
  double first_term = 0.0;   // (2pi/A) 2 lambda_c sqrt(L Dres) / (Delta^2 cos(phi)^{3/2})
  double second_term = 0.0;  // order_constant * K * A^2 / N^2 * lambda_c^{-3/2}
  double total = 0.0;
};

/// Upper bound on the rank-1 PSD restricted isometry constant.  The second
/// term's order constant is not pinned by the theory; both terms are
/// reported separately.
RicBound ric_bound(const BoundInputs& inputs, double order_constant = 1.0);

/// Smallest pixel spacing with a recovery guarantee (valid when N^2 >> K):
///   Delta_min = sqrt((2pi/A) 2 lambda_c sqrt(L Dres) / (0.214 cos(phi)^{3/2})).
double resolution_bound(const BoundInputs& inputs);

struct SampleComplexityReport {
  double mn2 = 0.0;         // M * N^2
  double k_54 = 0.0;        // K^{5/4}
  bool mn2_ok = false;      // M N^2 >= K^{5/4}
  double n2 = 0.0;          // N^2
  double k_34 = 0.0;        // K^{3/4}
  bool n2_ok = false;       // N^2 >= K^{3/4}
  double m_required = 0.0;  // 5.8 * L / Delta_res
  bool m_ok = false;        // M >= m_required (else: sinc-accuracy margin not met)
};

SampleComplexityReport sample_complexity_check(int scene_size, int frequencies, int receivers,
                                               double side_length, double range_resolution);

/// Sampled lower bound on the restricted isometry constant: max over random
/// real unit scenes of |  ||F(rho rho^T)||^2 / ||rho rho^T||_F^2 - 1 |.
/// Scenes are normalized standard-normal vectors; deterministic given seed.
double empirical_ric(const LiftedOperator& op, int trials, std::uint64_t seed);

/// Everything the `bounds` subcommand reports for one configuration.
struct FeasibilityReport {
  BoundInputs inputs;
  RicBound ric;
  double resolution_limit = 0.0;     // Delta_min
  bool spacing_feasible = false;     // Delta >= Delta_min
  bool super_resolution = false;     // Delta < Delta_res
  bool first_term_ok = false;        // first term < 0.214
  SampleComplexityReport samples;
  int frequencies = 0;
};

FeasibilityReport assess_feasibility(const Geometry& geometry, const SceneGrid& grid,
                                     const SpectralGrid& spectral, double order_constant = 1.0);

}  // namespace gwfrad
