#pragma once

#include <Eigen/Dense>
#include <vector>

#include "hilbert/projective.hpp"

namespace hilbert {

/// H-representation of the convex hull of a point cloud, with bookkeeping
/// about which input points realize each facet.
struct HullResult {
  Mat A;  // unit-norm outward facet normals, one row per facet
  Vec b;  // offsets: A x <= b on the hull, with equality on the facet
  /// Indices of input points that are vertices of the hull. For dim 2 the
  /// indices are in counter-clockwise ring order.
  std::vector<int> vertices;
  /// Per facet, indices of input points lying on it (within tolerance).
  std::vector<std::vector<int>> facet_points;
};

/// Convex hull in dimension 1, 2 or 3. The input must affinely span the
/// space. Dimension 3 runs an incremental construction on a deterministic
/// joggle of the input and refits facet planes from the original points, so
/// coplanar inputs (lids, panels) come back as single merged facets.
HullResult convex_hull(const std::vector<Vec>& points);

/// Hausdorff distance between two finite point clouds.
double hausdorff_distance(const std::vector<Vec>& a, const std::vector<Vec>& b);

}  // namespace hilbert
