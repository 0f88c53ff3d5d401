#pragma once

#include <optional>
#include <vector>

#include "hilbert/convex_body.hpp"

namespace hilbert {

enum class RayMethod {
  Auto,        // closed form where the kind has one, else bisection
  ClosedForm,  // quadric / facet-parameter intersection
  Bisection,   // bisection on the membership oracle
};

/// Boundary point of the ray {origin + t * direction : t > 0} in chart
/// coordinates. The origin must be interior and the direction nonzero.
Vec boundary_ray_chart(const ConvexBody& body, const Vec& origin, const Vec& direction,
                       RayMethod method = RayMethod::Auto);
ProjPoint boundary_ray(const ConvexBody& body, const ProjPoint& origin, const Vec& direction,
                       RayMethod method = RayMethod::Auto);

/// Endpoints of the maximal open segment of the body through two interior
/// points, aligned a, x, y, b.
struct Chord {
  ProjPoint a;
  ProjPoint b;
};
Chord chord(const ConvexBody& body, const ProjPoint& x, const ProjPoint& y,
            RayMethod method = RayMethod::Auto);

/// Cross-ratio [a,x,y,b] of four collinear chart points:
/// (|b-x| |a-y|) / (|a-x| |b-y|). Returns +infinity when a = x or b = y.
double cross_ratio(const Vec& a, const Vec& x, const Vec& y, const Vec& b);

/// Hilbert distance: half the log of the cross-ratio of x, y with their
/// chord endpoints.
double hilbert_distance(const ConvexBody& body, const ProjPoint& x, const ProjPoint& y,
                        RayMethod method = RayMethod::Auto);
double hilbert_distance_chart(const ConvexBody& body, const Vec& u, const Vec& v,
                              RayMethod method = RayMethod::Auto);

ProjPoint apply_transform(const ProjTransform& g, const ProjPoint& p);

/// Image body under a projective transformation. Halfspaces and quadrics
/// transport exactly; hull bodies are rebuilt from transformed vertices; an
/// omega_f body comes back as a plain polytope. The default chart covector
/// is the pushforward of the old one, which is positive on the image closure
/// by construction; a replacement chart is validated against sampled closure
/// points.
ConvexBody apply_transform_body(const ProjTransform& g, const ConvexBody& body,
                                const std::optional<AffineChart>& replacement_chart = {});

/// Chart radius of the Hilbert ball around u along a unit direction: the
/// positive s with d(u, u + s w) = R, from the chord through u in that
/// direction.
double ball_extent(const ConvexBody& body, const Vec& u, const Vec& unit_dir, double R,
                   RayMethod method = RayMethod::Auto);

/// Deterministic boundary sample: rays cast from the base point.
std::vector<Vec> boundary_sample_chart(const ConvexBody& body, int n);

}  // namespace hilbert
