#pragma once

#include <Eigen/Core>
#include <vector>

namespace gwfrad {

/// Regular square pixel grid centered at the origin, flat topography.
///
/// Positions are pixel centers, row-major: index k = iy * P + ix with
/// x1 = -L/2 + (ix + 1/2) * spacing and x2 likewise, embedded in 3-D as
/// [x1, x2, 0].
class SceneGrid {
public:
  SceneGrid(double side_length, int points_per_side);

  double side_length() const { return side_length_; }
  int points_per_side() const { return points_per_side_; }
  double spacing() const { return spacing_; }
  int size() const { return static_cast<int>(positions_.size()); }  // K

  const Eigen::Vector3d& position(int k) const { return positions_[k]; }
  const std::vector<Eigen::Vector3d>& positions() const { return positions_; }

  /// Index of the pixel center closest to a ground-plane point.
  int nearest_index(double x1, double x2) const;

private:
  double side_length_ = 0.0;
  int points_per_side_ = 0;
  double spacing_ = 0.0;
  std::vector<Eigen::Vector3d> positions_;
};

SceneGrid build_scene_grid(double side_length, int points_per_side);

/// Multistatic sensor layout.  Look directions are unit vectors from the
/// scene center (origin) toward each antenna; they carry the far-field
/// expansion |x - a| ~ |a| - <a_hat, x>.
struct Geometry {
  std::vector<Eigen::Vector3d> receiver_positions;
  Eigen::Vector3d transmitter_position = Eigen::Vector3d::Zero();
  std::vector<Eigen::Vector3d> receiver_look_directions;
  Eigen::Vector3d transmitter_look_direction = Eigen::Vector3d::Zero();

  bool arc = false;                    // built by build_arc_geometry
  double aperture = 0.0;               // A [rad], arc only
  double elevation = 0.0;              // common receiver elevation [rad], arc only
  double receiver_ground_range = 0.0;  // [m], arc only

  int receiver_count() const { return static_cast<int>(receiver_positions.size()); }
};

/// Receivers on a circular arc: receiver i at ground range `ground_range`,
/// height `height`, azimuth A*i/N for i = 0..N-1; all share elevation
/// atan(height / ground_range).
Geometry build_arc_geometry(int receivers, double aperture, double ground_range,
                            double height, const Eigen::Vector3d& tx_position);

/// Arbitrary receiver placement, for testing; bound formulas only apply to
/// arc geometries.
Geometry build_generic_geometry(std::vector<Eigen::Vector3d> receivers,
                                const Eigen::Vector3d& tx_position);

}  // namespace gwfrad
