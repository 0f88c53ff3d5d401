#include "hilbert/omega_f.hpp"

#include <algorithm>
#include <cmath>

#include "hilbert/errors.hpp"
#include "hilbert/hull.hpp"
#include "hilbert/balls.hpp"
#include "hilbert/metric.hpp"
#include "hilbert/sampling.hpp"
#include "hilbert/tolerances.hpp"

namespace hilbert {

namespace {
constexpr double kTwoPi = 2.0 * M_PI;
constexpr double kAngleEps = 1e-9;

double circular_gap(double a, double b) {
  double d = std::fmod(std::abs(a - b), kTwoPi);
  return std::min(d, kTwoPi - d);
}
}  // namespace

double normalize_angle(double theta) {
  double t = std::fmod(theta, kTwoPi);
  if (t < 0.0) t += kTwoPi;
  if (kTwoPi - t < 1e-15) t = 0.0;
  return t;
}

StepFunctionSpec StepFunctionSpec::constant(double v) {
  StepFunctionSpec s;
  s.values = {v};
  return s;
}

void StepFunctionSpec::validate() const {
  if (values.empty()) fail(ErrorCode::BadSpec, "step function needs at least one value");
  if (breakpoints.empty()) {
    if (values.size() != 1) fail(ErrorCode::BadSpec, "no breakpoints: exactly one value expected");
  } else if (values.size() != breakpoints.size()) {
    fail(ErrorCode::BadSpec, "need one value per arc between breakpoints");
  }
  for (size_t i = 0; i < breakpoints.size(); ++i) {
    if (breakpoints[i] < 0.0 || breakpoints[i] >= kTwoPi) {
      fail(ErrorCode::BadSpec, "breakpoints must lie in [0, 2pi)");
    }
    if (i > 0 && breakpoints[i] <= breakpoints[i - 1] + kAngleEps) {
      fail(ErrorCode::BadSpec, "breakpoints must be strictly increasing");
    }
  }
  for (double v : values) {
    if (!(v >= 1.0)) fail(ErrorCode::BadSpec, "step function must satisfy f >= 1");
  }
  for (const auto& [theta, v] : point_values) {
    double t = normalize_angle(theta);
    bool matches = false;
    for (double bp : breakpoints) matches = matches || circular_gap(t, bp) <= kAngleEps;
    if (!matches) fail(ErrorCode::BadSpec, "point value must sit on a breakpoint");
    if (v < std::max(left_limit(t), right_limit(t))) {
      fail(ErrorCode::BadSpec, "point value breaks upper semi-continuity");
    }
    if (!(v >= 1.0)) fail(ErrorCode::BadSpec, "step function must satisfy f >= 1");
  }
}

double StepFunctionSpec::right_limit(double theta) const {
  if (breakpoints.empty()) return values[0];
  double t = normalize_angle(theta);
  // values[i] holds on (breakpoints[i], breakpoints[i+1]); right limit at t
  // is the value of the arc starting at or before t.
  int idx = static_cast<int>(breakpoints.size()) - 1;
  for (size_t i = 0; i < breakpoints.size(); ++i) {
    if (breakpoints[i] <= t + kAngleEps) idx = static_cast<int>(i);
  }
  return values[idx];
}

double StepFunctionSpec::left_limit(double theta) const {
  if (breakpoints.empty()) return values[0];
  double t = normalize_angle(theta);
  int idx = static_cast<int>(breakpoints.size()) - 1;  // wrap: arc before bp[0]
  for (size_t i = 0; i < breakpoints.size(); ++i) {
    if (breakpoints[i] < t - kAngleEps) idx = static_cast<int>(i);
  }
  return values[idx];
}

double StepFunctionSpec::value(double theta) const {
  if (breakpoints.empty()) return values[0];
  double t = normalize_angle(theta);
  for (double bp : breakpoints) {
    if (circular_gap(t, bp) <= kAngleEps) {
      for (const auto& [pt, v] : point_values) {
        if (circular_gap(normalize_angle(pt), bp) <= kAngleEps) return v;
      }
      return std::max(left_limit(bp), right_limit(bp));
    }
  }
  return right_limit(t);
}

bool StepFunctionSpec::continuous_at(double theta) const {
  double t = normalize_angle(theta);
  for (double bp : breakpoints) {
    if (circular_gap(t, bp) <= kAngleEps) {
      double l = left_limit(bp), r = right_limit(bp), v = value(bp);
      return std::abs(l - r) <= 1e-12 && std::abs(v - l) <= 1e-12;
    }
  }
  return true;
}

std::optional<int> OmegaFInfo::vertical_face_index(const Vec& u) const {
  double rho = std::hypot(u[0], u[1]);
  if (std::abs(rho - 1.0) > tol::active * 10.0) return std::nullopt;
  double theta = normalize_angle(std::atan2(u[1], u[0]));
  int k = nearest_grid_index(theta);
  if (circular_gap(grid_angles[k], theta) > kAngleEps) return std::nullopt;
  if (std::abs(u[2]) > grid_values[k] + tol::active * (1.0 + grid_values[k])) return std::nullopt;
  return k;
}

int OmegaFInfo::nearest_grid_index(double theta) const {
  double t = normalize_angle(theta);
  auto it = std::lower_bound(grid_angles.begin(), grid_angles.end(), t);
  int hi = static_cast<int>(it - grid_angles.begin()) % static_cast<int>(grid_angles.size());
  int lo = (hi + static_cast<int>(grid_angles.size()) - 1) % static_cast<int>(grid_angles.size());
  return circular_gap(grid_angles[lo], t) <= circular_gap(grid_angles[hi], t) ? lo : hi;
}

ConvexBody build_omega_f(const StepFunctionSpec& spec, int grid_n) {
  spec.validate();
  if (grid_n < 64) fail(ErrorCode::BadSpec, "grid_n must be at least 64");

  std::vector<double> angles;
  angles.reserve(grid_n + 2 * spec.breakpoints.size());
  for (int k = 0; k < grid_n; ++k) angles.push_back(kTwoPi * k / grid_n);
  const size_t nb = spec.breakpoints.size();
  for (size_t j = 0; j < nb; ++j) {
    angles.push_back(spec.breakpoints[j]);
    double next = (j + 1 < nb) ? spec.breakpoints[j + 1] : spec.breakpoints[0] + kTwoPi;
    angles.push_back(normalize_angle(0.5 * (spec.breakpoints[j] + next)));
  }
  std::sort(angles.begin(), angles.end());
  angles.erase(std::unique(angles.begin(), angles.end(),
                           [](double a, double b) { return circular_gap(a, b) <= kAngleEps; }),
               angles.end());

  auto info = std::make_shared<OmegaFInfo>();
  info->spec = spec;
  info->grid_n = grid_n;
  info->grid_angles = angles;
  info->grid_values.reserve(angles.size());
  std::vector<Vec> pts;
  pts.reserve(2 * angles.size());
  for (double t : angles) {
    double f = spec.value(t);
    info->grid_values.push_back(f);
    Vec top(3), bot(3);
    top << std::cos(t), std::sin(t), f;
    bot << std::cos(t), std::sin(t), -f;
    pts.push_back(top);
    pts.push_back(bot);
    info->generator_points.push_back(top);
    info->generator_points.push_back(bot);
  }

  HullResult h = convex_hull(pts);
  info->hull_vertex_of_generator.assign(pts.size(), 0);
  for (int i : h.vertices) info->hull_vertex_of_generator[i] = 1;

  std::vector<Vec> verts;
  verts.reserve(h.vertices.size());
  for (int i : h.vertices) verts.push_back(pts[i]);

  Vec base = Vec::Zero(3);
  return ConvexBody::omega_f_body(std::move(h.A), std::move(h.b), AffineChart::standard(3),
                                  std::move(base), std::move(info), std::move(verts));
}

ExtendedDistance vertical_face_distance(const ConvexBody& body, double theta, double z1,
                                        double z2) {
  const OmegaFInfo& info = body.omega_info();
  double f = info.spec.value(theta);
  if (std::abs(z1) >= f || std::abs(z2) >= f) {
    fail(ErrorCode::OutsideFace, "heights must lie strictly inside (-f, f)");
  }
  if (z1 > z2) std::swap(z1, z2);
  double cr = ((f - z1) * (f + z2)) / ((f + z1) * (f - z2));
  return {0.5 * std::log(std::max(cr, 1.0))};
}

std::vector<double> almost_continuity_points(const StepFunctionSpec& spec, double eps) {
  if (!(eps > 0.0)) fail(ErrorCode::BadSpec, "eps must be positive");
  spec.validate();
  std::vector<double> out;
  const size_t nb = spec.breakpoints.size();
  if (nb == 0) {
    out.push_back(0.0);
    return out;
  }
  for (size_t j = 0; j < nb; ++j) {
    double next = (j + 1 < nb) ? spec.breakpoints[j + 1] : spec.breakpoints[0] + kTwoPi;
    out.push_back(normalize_angle(0.5 * (spec.breakpoints[j] + next)));
    double bp = spec.breakpoints[j];
    double lim = std::min(spec.left_limit(bp), spec.right_limit(bp));
    if (lim >= spec.value(bp) - eps) out.push_back(bp);
  }
  std::sort(out.begin(), out.end());
  return out;
}


GrainReport grain_of_sand_probe(const ConvexBody& body, double theta, double z, double r,
                                double R, double u_halfwidth, double delta, int samples) {
  if (!(0.0 < r && r < R)) fail(ErrorCode::BadRadii, "need 0 < r < R");
  const OmegaFInfo& info = body.omega_info();
  double t0 = normalize_angle(theta);
  int k0 = info.nearest_grid_index(t0);
  if (circular_gap(info.grid_angles[k0], t0) > kAngleEps) {
    fail(ErrorCode::BadSpec, "anchor angle must be a grid angle of the built body");
  }
  t0 = info.grid_angles[k0];
  const double f0 = info.grid_values[k0];
  if (std::abs(z) > f0) fail(ErrorCode::OutsideFace, "anchor height outside the closed face");

  GrainReport rep;
  if (!info.spec.continuous_at(t0)) rep.status = GrainStatus::HypothesisNotMet;

  if (std::abs(std::abs(z) - f0) <= tol::active * (1.0 + f0)) {
    // Extremal anchor: the r-ball is the anchor itself, strictly inside U.
    rep.anchor_extremal = true;
    rep.checked = 1;
    return rep;
  }

  // Samples of the closed r-ball on the anchor's vertical face.
  std::vector<double> heights;
  heights.push_back(z);
  const double e2r = std::exp(2.0 * r);
  for (int i = 0; i < samples; ++i) {
    double sgn = (i % 2 == 0) ? 1.0 : -1.0;
    // exact radial extent of the r-ball toward sgn on the face (-f0, f0)
    double a_back = f0 + sgn * z;
    double b_fwd = f0 - sgn * z;
    double s = a_back * b_fwd * (e2r - 1.0) / (b_fwd + e2r * a_back);
    heights.push_back(z + sgn * halton(i, 3) * s);
    if (i < 2) heights.push_back(z + sgn * s);  // the sphere points
  }

  // U is the compact rectangle on the boundary around the anchor: angles
  // within the halfwidth, heights within a fixed window. On the anchor's
  // face the R-ball around any r-ball point dips down to -f tanh(R - r)
  // relative to the anchor, so half that depth keeps U a genuine small
  // neighbourhood that the covering balls still reach. A point z' is
  // covered by B(U, R) exactly when the R-ball around z' meets U (the
  // extended distance is symmetric), so coverage is tested on radial
  // samples of that ball.
  const double h_window = 0.5 * f0 * std::tanh(R - r);
  rep.height_window = h_window;
  auto in_band = [&](const Vec& u) {
    double ang = normalize_angle(std::atan2(u[1], u[0]));
    if (circular_gap(ang, t0) > u_halfwidth + kAngleEps) return false;
    return std::abs(u[2] - z) <= h_window;
  };

  const int jitters = 24;
  int checked = 0, uncovered = 0;
  double worst = 0.0;
  for (double h : heights) {
    Vec p(3);
    p << std::cos(t0), std::sin(t0), h;
    for (int j = 0; j <= jitters; ++j) {
      Vec q;
      if (j == 0) {
        q = p;
      } else {
        Vec target = p + delta * Vec(halton_direction(j, 3));
        q = boundary_ray_chart(body, body.base_chart(), Vec(target - body.base_chart()));
        if ((q - p).norm() > delta * (1.0 + 1e-6)) continue;
      }
      ++checked;
      bool covered = in_band(q);
      double miss = 0.0;
      if (!covered) {
        ClosurePoint zc = classify(body, body.chart().from_chart(q));
        miss = std::numeric_limits<double>::infinity();
        for (const auto& s : closure_ball_sample(body, zc, R, 32)) {
          if (in_band(s.chart)) {
            covered = true;
            break;
          }
          double excess = std::max(0.0, std::abs(s.chart[2] - z) - h_window) +
                          std::max(0.0, circular_gap(normalize_angle(std::atan2(s.chart[1], s.chart[0])), t0) -
                                            u_halfwidth);
          miss = std::min(miss, excess);
        }
      }
      if (!covered) {
        ++uncovered;
        if (rep.witnesses.size() < 8) rep.witnesses.push_back(q);
        worst = std::max(worst, miss);
      }
    }
  }
  rep.checked = checked;
  rep.uncovered = uncovered;
  rep.worst_cover_distance = worst;
  if (rep.status != GrainStatus::HypothesisNotMet) {
    rep.status = (uncovered == 0) ? GrainStatus::Pass : GrainStatus::Fail;
  }
  return rep;
}

}  // namespace hilbert
