#pragma once

#include <memory>
#include <vector>

#include "hilbert/projective.hpp"

namespace hilbert {

struct OmegaFInfo;  // defined in omega_f.hpp

enum class BodyKind { HPolytope, Ellipsoid, Hull, OmegaF };

/// A properly convex open set, given in chart coordinates of an affine chart
/// whose functional is positive on the closure. Immutable after
/// construction; cheap to copy and safe to share across threads.
class ConvexBody {
 public:
  /// Intersection of halfspaces A u <= b (rows are renormalized to unit
  /// norm). Rejects unbounded or empty inputs and base points that are not
  /// strictly interior.
  static ConvexBody hpolytope(Mat a, Vec b, AffineChart chart, Vec base_chart);

  /// { u : (u - center)^T shape (u - center) < 1 } with shape positive
  /// definite; the base point is the center.
  static ConvexBody ellipsoid(Vec center, Mat shape, AffineChart chart);

  /// Interior of the convex hull of chart points (dimension 1-3). The base
  /// point defaults to the vertex centroid.
  static ConvexBody hull_body(std::vector<Vec> points, AffineChart chart);

  /// Open interval (lo, hi) as a 1-dimensional body in the standard chart.
  static ConvexBody segment(double lo, double hi);

  /// Used by build_omega_f: a polytope H-rep carrying the analytic data of
  /// the construction.
  static ConvexBody omega_f_body(Mat a, Vec b, AffineChart chart, Vec base_chart,
                                 std::shared_ptr<const OmegaFInfo> info,
                                 std::vector<Vec> hull_vertices);

  BodyKind kind() const;
  int dim() const;
  const AffineChart& chart() const;
  const ProjPoint& base() const;
  const Vec& base_chart() const;

  /// Signed chart-scale margin: positive strictly inside, negative outside,
  /// approximately the chart distance to the boundary near the boundary.
  double margin(const Vec& u) const;
  bool is_interior(const Vec& u) const { return margin(u) > 0.0; }

  bool has_hrep() const;
  const Mat& A() const;
  const Vec& b() const;

  const Vec& center() const;
  const Mat& shape() const;

  /// Hull vertices in construction order (counter-clockwise ring for d = 2).
  const std::vector<Vec>& hull_vertices() const;

  const OmegaFInfo& omega_info() const;
  std::shared_ptr<const OmegaFInfo> omega_info_ptr() const;

 private:
  struct Impl;
  explicit ConvexBody(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

}  // namespace hilbert
