#pragma once

#include <Eigen/Dense>
#include <cstdint>

#include "gwfrad/forward_model.hpp"

namespace gwfrad {

/// Matrix-free application of the lifted forward map
///   F(X)_{(i<j, m)} = s * (L_i^m)^H X L_j^m,    s = 1/sqrt(M * C(N,2)),
/// restricted to rank-1 scenes X = rho rho^T, together with the symmetrized
/// real backprojection P_S(Re{F^H(e)}) applied to a vector.  The scale s is
/// folded into the operator once; no separate 1/M factor is carried, so with
/// compensated amplitudes ||F(rho rho^T)||^2 ~ ||rho rho^T||_F^2 and the
/// restricted isometry constant is read off as |that ratio - 1|.
///
/// A K x K matrix is never materialized: both directions run through the
/// per-(receiver, frequency) linear terms <L_i^m, rho>, computed once and
/// reused within an iteration.  All reductions are fixed-order.
class LiftedOperator {
public:
  explicit LiftedOperator(MeasurementVectors vectors);

  int scene_size() const { return vectors_.scene_size(); }
  int receiver_count() const { return vectors_.receiver_count(); }
  int frequency_count() const { return vectors_.frequency_count(); }
  int pair_count() const;
  int data_size() const { return pair_count() * frequency_count(); }
  double scale() const { return scale_; }
  const MeasurementVectors& vectors() const { return vectors_; }

  /// F(rho rho^T): entries s * <L_i^m, rho> <L_j^m, rho>^*.
  Eigen::VectorXcd forward_rank1(const Eigen::VectorXd& rho) const;
  Eigen::VectorXcd forward_from_linear_terms(const Eigen::VectorXcd& linear_terms) const;

  /// P_S(Re{F^H(e)}) v with P_S(X) = (X + X^T)/2.
  Eigen::VectorXd adjoint_apply(const Eigen::VectorXcd& e, const Eigen::VectorXd& v) const;
  /// Same, reusing precomputed linear terms of v.
  Eigen::VectorXd adjoint_apply(const Eigen::VectorXcd& e, const Eigen::VectorXcd& linear_terms_v) const;

  /// Action of the backprojected lifted estimate X_hat = P_S(Re{F^H(d)}) on
  /// v; the engine behind the solver's power iteration.
  Eigen::VectorXd backprojection_matvec(const InterferometricData& d, const Eigen::VectorXd& v) const;

  /// Complex multiplications of one forward application (the complexity
  /// contract: O(N M K + M N^2)).
  std::uint64_t forward_multiplications() const;
  /// Complex multiplications of one adjoint application (O(N M K + M N^2)).
  std::uint64_t adjoint_multiplications() const;

private:
  MeasurementVectors vectors_;
  double scale_ = 0.0;
};

}  // namespace gwfrad
