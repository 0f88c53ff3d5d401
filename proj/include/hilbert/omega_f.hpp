#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hilbert/convex_body.hpp"
#include "hilbert/faces.hpp"

namespace hilbert {

/// A 2pi-periodic piecewise-constant function f >= 1, upper semi-continuous:
/// values[i] holds on the open arc (breakpoints[i], breakpoints[i+1]), and
/// the value at a breakpoint defaults to the larger one-sided limit unless
/// overridden upward in point_values.
struct StepFunctionSpec {
  std::vector<double> breakpoints;  // sorted, in [0, 2pi)
  std::vector<double> values;       // one per arc; a single value if no breakpoints
  std::map<double, double> point_values;

  static StepFunctionSpec constant(double v);

  double value(double theta) const;
  double left_limit(double theta) const;
  double right_limit(double theta) const;
  bool continuous_at(double theta) const;
  void validate() const;
};

double normalize_angle(double theta);  // into [0, 2pi)

/// Analytic data attached to a built omega_f body: the sampled grid of the
/// generator curves and the exact vertical faces.
struct OmegaFInfo {
  StepFunctionSpec spec;
  int grid_n = 0;
  std::vector<double> grid_angles;  // sorted; includes breakpoints and arc midpoints
  std::vector<double> grid_values;  // f at the grid angles
  std::vector<Vec> generator_points;  // (cos t, sin t, +/- f(t)) per grid angle
  std::vector<int> hull_vertex_of_generator;  // 1 if the hull reports it extreme

  /// Index of the grid angle whose vertical open face passes through the
  /// chart point, if any: radius within tolerance of 1, angle within
  /// tolerance of a grid angle, |z| <= f.
  std::optional<int> vertical_face_index(const Vec& u) const;
  int nearest_grid_index(double theta) const;
};

/// Interior of the convex hull of the two vertical translates of the unit
/// circle graphed by +/- f, as a polytope body in the standard chart of
/// P(R^4) carrying the analytic face data.
ConvexBody build_omega_f(const StepFunctionSpec& spec, int grid_n);

/// Exact distance on the vertical open face at the given angle:
/// log(((f-z1)(f+z2)) / ((f+z1)(f-z2))) / 2 for z1 <= z2.
ExtendedDistance vertical_face_distance(const ConvexBody& body, double theta, double z1,
                                        double z2);

/// Representative angles at which f is almost continuous at scale eps: one
/// midpoint per arc, plus each breakpoint whose one-sided limits stay within
/// eps below the point value.
std::vector<double> almost_continuity_points(const StepFunctionSpec& spec, double eps);

enum class GrainStatus { Pass, Fail, HypothesisNotMet };

struct GrainReport {
  GrainStatus status = GrainStatus::Pass;
  bool anchor_extremal = false;
  int checked = 0;
  int uncovered = 0;
  double height_window = 0.0;         // height halfwidth of the rectangle U
  double worst_cover_distance = 0.0;  // how far the worst ball sample missed U
  std::vector<Vec> witnesses;         // uncovered perturbed boundary points
};

/// Coverage probe for a ball on a vertical face: every boundary point within
/// delta of a sample of the closed r-ball around the anchor must lie in the
/// uniform R-neighbourhood of U, where U is the compact rectangle on the
/// boundary with the given angular halfwidth and a height window just
/// containing the anchor ball. Coverage is decided by intersecting the
/// R-ball of the perturbed point with U. Anchors where f jumps report
/// HypothesisNotMet rather than Fail.
GrainReport grain_of_sand_probe(const ConvexBody& body, double theta, double z, double r,
                                double R, double u_halfwidth, double delta, int samples);

}  // namespace hilbert
