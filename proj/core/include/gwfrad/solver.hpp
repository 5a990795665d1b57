#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "gwfrad/forward_model.hpp"
#include "gwfrad/lifted_operator.hpp"

namespace gwfrad {

struct SolverConfig {
  int max_iterations = 4000;
  double step_size = 0.2;               // mu
  int power_iterations = 200;
  double power_tolerance = 1e-9;
  double convergence_tolerance = 0.0;   // stop when J_k / J_0 falls below; 0 = run full budget
  std::uint64_t seed = 0;               // power-iteration start vector
};

struct SpectralInit {
  Eigen::VectorXd direction;   // unit leading eigenvector of X_hat
  double eigenvalue = 0.0;     // lambda_0
  Eigen::VectorXd initial;     // rho_0 = sqrt(lambda_0) * direction
  bool converged = false;
  int iterations = 0;
  double residual = 0.0;       // ||X_hat v - lambda v|| at exit
};

/// Leading eigenpair of X_hat = P_S(Re{F^H(d)}) by matrix-free power
/// iteration; throws NumericalError if the leading eigenvalue is not
/// positive.  Non-convergence within the budget is reported, not fatal.
SpectralInit spectral_initialize(const InterferometricData& d, const LiftedOperator& op,
                                 const SolverConfig& config);

/// J(rho) = 1/2 || F(rho rho^T) - d ||^2.
double objective(const Eigen::VectorXd& rho, const InterferometricData& d,
                 const LiftedOperator& op);

/// grad J(rho) = 2 P_S(Re{F^H(e)}) rho with e = F(rho rho^T) - d.  The
/// factor 2 comes from the two appearances of rho in the lifted scene and
/// makes this the exact Euclidean gradient of `objective`.
Eigen::VectorXd gradient(const Eigen::VectorXd& rho, const InterferometricData& d,
                         const LiftedOperator& op);

struct IterationRecord {
  int iteration = 0;
  double objective = 0.0;
  double aligned_mse = 0.0;  // NaN when no ground truth was supplied
};

struct SolveResult {
  Eigen::VectorXd estimate;
  SpectralInit init;
  std::vector<double> objective_history;  // J(rho_k), k = 0..iterations
  std::vector<IterationRecord> trace;
  int iterations = 0;
  bool reached_tolerance = false;
};

/// Spectral initialization followed by fixed-step descent
///   rho_{k+1} = rho_k - (mu / ||rho_0||^2) grad J(rho_k).
/// Aborts with NumericalError if J exceeds 1e3 times its initial value.
/// `truth` (optional) only feeds the per-iteration aligned MSE trace.
/// `initial_override` replaces the spectral initial iterate when non-null.
SolveResult solve(const InterferometricData& d, const LiftedOperator& op,
                  const SolverConfig& config, const Eigen::VectorXd* truth = nullptr,
                  const Eigen::VectorXd* initial_override = nullptr);

/// (1/K) || truth - s * estimate ||^2 with s = sign(<truth, estimate>)
/// (s = +1 when the inner product is zero); removes the global sign
/// ambiguity of quadratic measurements.
double aligned_mse(const Eigen::VectorXd& estimate, const Eigen::VectorXd& truth);

}  // namespace gwfrad
