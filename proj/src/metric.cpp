#include "hilbert/metric.hpp"

#include <cmath>
#include <limits>

#include "hilbert/errors.hpp"
#include "hilbert/sampling.hpp"
#include "hilbert/tolerances.hpp"

namespace hilbert {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double polytope_ray_parameter(const Mat& a, const Vec& b, const Vec& u, const Vec& w) {
  double t = kInf;
  Vec slack = b - a * u;
  Vec speed = a * w;
  for (int i = 0; i < a.rows(); ++i) {
    if (speed[i] > 1e-14 * w.norm()) t = std::min(t, slack[i] / speed[i]);
  }
  if (!std::isfinite(t)) fail(ErrorCode::ComputeError, "ray never leaves the polytope");
  return std::max(t, 0.0);
}

double ellipsoid_ray_parameter(const Mat& m, const Vec& c, const Vec& u, const Vec& w) {
  Vec v = u - c;
  double qa = w.dot(m * w);
  double qb = v.dot(m * w);
  double qc = v.dot(m * v) - 1.0;
  double disc = qb * qb - qa * qc;
  if (qa <= 0.0 || disc < 0.0) fail(ErrorCode::ComputeError, "degenerate quadric ray");
  return (-qb + std::sqrt(disc)) / qa;
}

double bisect_ray_parameter(const ConvexBody& body, const Vec& u, const Vec& w) {
  const double wn = w.norm();
  double lo = 0.0, hi = 1.0 / wn;
  int iter = 0;
  const int cap = 200;
  while (body.margin(u + hi * w) > 0.0) {
    lo = hi;
    hi *= 2.0;
    if (++iter >= cap || hi * wn > 1e12) {
      fail(ErrorCode::ComputeError, "ray bracket failed; body unbounded?");
    }
  }
  while ((hi - lo) * wn > tol::boundary && iter++ < cap) {
    double mid = 0.5 * (lo + hi);
    if (body.margin(u + mid * w) > 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

Vec boundary_ray_chart(const ConvexBody& body, const Vec& origin, const Vec& direction,
                       RayMethod method) {
  if (direction.norm() <= 0.0) fail(ErrorCode::BadSpec, "ray direction must be nonzero");
  if (!(body.margin(origin) > 0.0)) {
    fail(ErrorCode::NotInterior, "ray origin is not interior to the body");
  }
  double t;
  if (method == RayMethod::Bisection) {
    t = bisect_ray_parameter(body, origin, direction);
  } else {
    switch (body.kind()) {
      case BodyKind::Ellipsoid:
        t = ellipsoid_ray_parameter(body.shape(), body.center(), origin, direction);
        break;
      default:
        t = polytope_ray_parameter(body.A(), body.b(), origin, direction);
        break;
    }
  }
  return origin + t * direction;
}

ProjPoint boundary_ray(const ConvexBody& body, const ProjPoint& origin, const Vec& direction,
                       RayMethod method) {
  Vec u = body.chart().to_chart(origin);
  return body.chart().from_chart(boundary_ray_chart(body, u, direction, method));
}

Chord chord(const ConvexBody& body, const ProjPoint& x, const ProjPoint& y, RayMethod method) {
  if (x.approx_equal(y)) fail(ErrorCode::DegenerateChord, "chord through coincident points");
  Vec u = body.chart().to_chart(x);
  Vec v = body.chart().to_chart(y);
  Vec w = v - u;
  Vec a = boundary_ray_chart(body, v, -w, method);  // behind x
  Vec b = boundary_ray_chart(body, u, w, method);   // beyond y
  return Chord{body.chart().from_chart(a), body.chart().from_chart(b)};
}

double cross_ratio(const Vec& a, const Vec& x, const Vec& y, const Vec& b) {
  const Vec d1 = x - a, d2 = y - a, d3 = b - a;
  // Largest 2x2 minor of a pair of difference vectors, evaluated directly so
  // nearly-parallel pairs do not lose precision.
  auto max_minor = [](const Vec& p, const Vec& q) {
    double worst = 0.0;
    for (int i = 0; i < p.size(); ++i) {
      for (int j = i + 1; j < p.size(); ++j) {
        worst = std::max(worst, std::abs(p[i] * q[j] - p[j] * q[i]));
      }
    }
    return worst;
  };
  const Vec dims[3] = {d1, d2, d3};
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      double rel = dims[i].norm() * dims[j].norm();
      if (rel > 0.0 && max_minor(dims[i], dims[j]) > tol::collinear * rel) {
        fail(ErrorCode::NotCollinear, "cross-ratio of non-collinear points");
      }
    }
  }
  double scale = std::max({d1.norm(), d2.norm(), d3.norm(), 1e-300});
  double ax = (a - x).norm(), by = (b - y).norm();
  if (ax <= 1e-14 * scale || by <= 1e-14 * scale) return kInf;
  return ((b - x).norm() * (a - y).norm()) / (ax * by);
}

double hilbert_distance_chart(const ConvexBody& body, const Vec& u, const Vec& v,
                              RayMethod method) {
  Vec w = v - u;
  double scale = std::max(1.0, std::max(u.norm(), v.norm()));
  if (w.norm() <= 1e-15 * scale) return 0.0;
  if (!(body.margin(u) > 0.0) || !(body.margin(v) > 0.0)) {
    fail(ErrorCode::NotInterior, "hilbert distance needs interior points");
  }
  Vec a = boundary_ray_chart(body, v, -w, method);
  Vec b = boundary_ray_chart(body, u, w, method);
  double cr = cross_ratio(a, u, v, b);
  return 0.5 * std::log(std::max(cr, 1.0));
}

double hilbert_distance(const ConvexBody& body, const ProjPoint& x, const ProjPoint& y,
                        RayMethod method) {
  if (x.approx_equal(y)) return 0.0;
  Vec u = body.chart().to_chart(x);
  Vec v = body.chart().to_chart(y);
  return hilbert_distance_chart(body, u, v, method);
}

ProjPoint apply_transform(const ProjTransform& g, const ProjPoint& p) { return g.apply(p); }

namespace {

AffineChart default_image_chart(const ProjTransform& g, const AffineChart& old_chart) {
  Mat ginv_t = g.matrix().inverse().transpose();
  return AffineChart(ginv_t * old_chart.covector());
}

// Homogeneous covector of the halfspace row (a, b): nonpositive on the body.
Vec homogeneous_halfspace(const AffineChart& chart, const Vec& a_row, double b_val) {
  Vec ba = chart.basis() * a_row;
  return ba - (ba.dot(chart.origin()) + b_val) * chart.covector();
}

}  // namespace

ConvexBody apply_transform_body(const ProjTransform& g, const ConvexBody& body,
                                const std::optional<AffineChart>& replacement_chart) {
  if (std::abs(g.det()) <= tol::det_floor) {
    fail(ErrorCode::SingularTransform, "transform is not invertible");
  }
  AffineChart new_chart =
      replacement_chart ? *replacement_chart : default_image_chart(g, body.chart());

  if (replacement_chart) {
    // A replacement chart must stay positive on the transformed closure.
    for (const Vec& s : boundary_sample_chart(body, 64)) {
      Vec img = g.matrix() * body.chart().lift(s);
      if (new_chart.functional(canonicalize(img)) <= 1e-12) {
        fail(ErrorCode::ChartViolation, "chart functional vanishes on the image closure");
      }
    }
  }

  Vec new_base = new_chart.to_chart(g.apply(body.base()));
  const Mat ginv_t = g.matrix().inverse().transpose();

  switch (body.kind()) {
    case BodyKind::Hull: {
      std::vector<Vec> pts;
      pts.reserve(body.hull_vertices().size());
      for (const Vec& p : body.hull_vertices()) {
        pts.push_back(new_chart.to_chart(g.apply(body.chart().from_chart(p))));
      }
      return ConvexBody::hull_body(std::move(pts), new_chart);
    }
    case BodyKind::Ellipsoid: {
      // Homogeneous quadric: q(x) = |K x|_M^2 - l(x)^2 with K the chart
      // projection shifted to the center; transported by congruence.
      const AffineChart& ch = body.chart();
      Mat k = ch.basis().transpose() -
              (ch.basis().transpose() * ch.origin() + body.center()) * ch.covector().transpose();
      Mat q = k.transpose() * body.shape() * k -
              ch.covector() * ch.covector().transpose();
      Mat q2 = ginv_t * q * ginv_t.transpose();
      Mat ahat = new_chart.basis().transpose() * q2 * new_chart.basis();
      Vec bhat = new_chart.basis().transpose() * q2 * new_chart.origin();
      double chat = new_chart.origin().dot(q2 * new_chart.origin());
      Eigen::LLT<Mat> llt(-ahat);
      if (llt.info() == Eigen::Success) {
        ahat = -ahat;
        bhat = -bhat;
        chat = -chat;
      }
      Eigen::LLT<Mat> llt2(ahat);
      if (llt2.info() != Eigen::Success) {
        fail(ErrorCode::ChartViolation, "image quadric is unbounded in the chart");
      }
      Vec new_center = -ahat.ldlt().solve(bhat);
      double s = bhat.dot(ahat.ldlt().solve(bhat)) - chat;
      if (s <= 0.0) fail(ErrorCode::ChartViolation, "image quadric is empty in the chart");
      return ConvexBody::ellipsoid(new_center, ahat / s, new_chart);
    }
    default: {
      const Mat& a = body.A();
      const Vec& b = body.b();
      Mat a2(a.rows(), new_chart.dim());
      Vec b2(a.rows());
      for (int i = 0; i < a.rows(); ++i) {
        Vec n = ginv_t * homogeneous_halfspace(body.chart(), a.row(i).transpose(), b[i]);
        a2.row(i) = (new_chart.basis().transpose() * n).transpose();
        b2[i] = -n.dot(new_chart.origin());
      }
      return ConvexBody::hpolytope(std::move(a2), std::move(b2), new_chart, std::move(new_base));
    }
  }
}

double ball_extent(const ConvexBody& body, const Vec& u, const Vec& unit_dir, double R,
                   RayMethod method) {
  Vec fwd = boundary_ray_chart(body, u, unit_dir, method);
  Vec bwd = boundary_ray_chart(body, u, -unit_dir, method);
  double beta = (fwd - u).norm();
  double alpha = (bwd - u).norm();
  double e = std::exp(2.0 * R);
  return alpha * beta * (e - 1.0) / (beta + e * alpha);
}

std::vector<Vec> boundary_sample_chart(const ConvexBody& body, int n) {
  std::vector<Vec> out;
  out.reserve(n);
  const Vec& o = body.base_chart();
  const int d = body.dim();
  for (int i = 0; i < n; ++i) {
    Vec w;
    if (d == 2) {
      double phi = 2.0 * M_PI * i / n;
      w = Vec(2);
      w << std::cos(phi), std::sin(phi);
    } else if (d == 1) {
      w = Vec(1);
      w << (i % 2 == 0 ? 1.0 : -1.0);
    } else {
      w = halton_direction(i, d);
    }
    out.push_back(boundary_ray_chart(body, o, w));
  }
  return out;
}

}  // namespace hilbert
