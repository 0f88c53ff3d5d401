#pragma once

#include <limits>
#include <memory>
#include <optional>

#include "hilbert/convex_body.hpp"
#include "hilbert/metric.hpp"

namespace hilbert {

/// The open face of a closure point: the set of points y such that [x,y]
/// extends to an open segment of the closure around both ends. Interior
/// points get the whole body; extremal points get the trivial face.
struct FaceDescriptor {
  ProjPoint anchor;
  int dim = 0;
  bool whole_body = false;
  Vec origin_chart;  // ambient chart coordinates of the anchor
  /// Orthonormal chart directions spanning the face (d x dim). Face
  /// coordinates s correspond to the chart point origin_chart + frame * s.
  Mat frame;
  /// Homogeneous basis of the projective span ((d+1) x (dim+1)).
  Mat span;
  /// The open face as a properly convex body in its own coordinates, with
  /// the anchor at s = 0. Absent for extremal anchors.
  std::optional<ConvexBody> sub_body;
  /// Active constraint rows for polytope-backed bodies (sorted).
  std::vector<int> active;
};

FaceDescriptor face_of(const ConvexBody& body, const ProjPoint& x);

/// Whether an ambient chart point lies in the open face.
bool face_contains(const FaceDescriptor& face, const Vec& u);

/// Faces of the same body are equal or disjoint; equality is tested by
/// mutual anchor containment.
bool same_face(const FaceDescriptor& f1, const FaceDescriptor& f2);

/// A point of the closure, tagged interior or boundary-with-face.
struct ClosurePoint {
  ProjPoint point;
  Vec chart;
  bool interior = false;
  std::shared_ptr<const FaceDescriptor> face;  // set for boundary points
};

/// Locates a point relative to the body. Throws OutsideClosure beyond the
/// boundary tolerance.
ClosurePoint classify(const ConvexBody& body, const ProjPoint& p);

/// Distance value extended with an infinity sentinel: infinite exactly when
/// the two points lie in distinct faces.
struct ExtendedDistance {
  double value = 0.0;
  bool finite() const { return std::isfinite(value); }
  static ExtendedDistance infinite() {
    return {std::numeric_limits<double>::infinity()};
  }
};

/// Hilbert distance inside the common open face; the body's own metric when
/// both points are interior; infinite across distinct faces.
ExtendedDistance extended_distance(const ConvexBody& body, const ClosurePoint& x,
                                   const ClosurePoint& y);
ExtendedDistance extended_distance(const ConvexBody& body, const ProjPoint& x,
                                   const ProjPoint& y);

}  // namespace hilbert
