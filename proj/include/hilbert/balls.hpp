#pragma once

#include <map>
#include <string>
#include <vector>

#include "hilbert/faces.hpp"

namespace hilbert {

/// Homothety of the chart with the given centre and ratio.
inline Vec homothety(const Vec& centre, double t, const Vec& p) {
  return centre + t * (p - centre);
}

/// (e^{2R} - 1) / (e^{2r} - 1): the homothety ratio relating closure balls
/// of radii r < R around a common centre.
double ball_ratio(double r, double R);

/// diam * (e^{2r} + 1) / (dist * (e^{2r} - 1)): the homothety ratio at which
/// the scaled r-ball swallows the closed face, from the face diameter and
/// the anchor's distance to the relative boundary of its face.
double face_ratio(double diam, double dist, double r);

/// Deterministic low-discrepancy sample of the closed ball
/// { y : d(x, y) <= R } in the closure metric: radial samples in the open
/// face of x (in the whole body when x is interior). An extremal x yields
/// just {x}.
std::vector<ClosurePoint> closure_ball_sample(const ConvexBody& body, const ClosurePoint& x,
                                              double R, int n);

/// Chart diameter of the face and chart distance from the anchor to the
/// relative boundary of the face (exact for faces of dimension <= 2).
struct FaceGeometry {
  double diameter = 0.0;
  double boundary_distance = 0.0;
};
FaceGeometry face_geometry(const FaceDescriptor& face);

struct ProbeReport {
  std::string name;
  bool pass = true;
  /// Worst signed violation (distance beyond the allowed radius); pass iff
  /// it stays below the probe tolerance.
  double worst_margin = -1e300;
  std::vector<Vec> witnesses;
  std::map<std::string, double> data;
};

/// Checks that the closed face of x is contained in the homothety image
/// h_x^lambda of the closed r-ball, with lambda computed from the measured
/// face geometry: sampled closed-face points pulled back by 1/lambda must
/// stay within extended distance r (+1e-8) of x.
ProbeReport check_face_in_scaled_ball(const ConvexBody& body, const ClosurePoint& x, double r,
                                      int samples);

/// Checks that the closed R-ball around x is covered by the homothety image
/// h_x^mu of the closed r-ball with mu = (e^{2R}-1)/(e^{2r}-1): sampled
/// R-ball points pulled back by 1/mu must stay within extended distance r
/// (+1e-8) of x.
ProbeReport check_scaled_ball_in_ball(const ConvexBody& body, const ClosurePoint& x, double r,
                                      double R, int samples);

/// A convergent sequence of point pairs with its limit pair, for probing
/// lower semi-continuity of the extended distance.
struct SemicontinuitySequence {
  std::string name;
  std::vector<std::pair<ProjPoint, ProjPoint>> terms;
  std::pair<ProjPoint, ProjPoint> limit;
};

/// Asserts liminf d(x_n, y_n) >= d(x, y) - tol per sequence; the liminf is
/// surrogated by the minimum over the tail quarter of the terms.
ProbeReport semicontinuity_probe(const ConvexBody& body,
                                 const std::vector<SemicontinuitySequence>& sequences,
                                 double tolerance);

struct SemicontinuityCase {
  std::string name;
  ConvexBody body;
  std::vector<SemicontinuitySequence> sequences;
};

/// The standard probe suite: square and disk sequences plus omega_f jump
/// sequences across a height discontinuity.
std::vector<SemicontinuityCase> standard_semicontinuity_suite();

/// A random polytope configuration with a boundary anchor on a face of
/// dimension >= 1, for the containment checks.
struct FactConfig {
  std::string tag;
  ConvexBody body;
  ProjPoint anchor;
  double r = 0.0;
  double R = 0.0;
};
std::vector<FactConfig> random_fact_configurations(std::uint64_t seed, int count);

}  // namespace hilbert
