#include "hilbert/faces.hpp"

#include <algorithm>
#include <cmath>

#include "hilbert/errors.hpp"
#include "hilbert/omega_f.hpp"
#include "hilbert/tolerances.hpp"

namespace hilbert {

namespace {

double activity_scale(const Vec& u) { return tol::active * (1.0 + u.norm()); }

FaceDescriptor whole_body_face(const ConvexBody& body, const ProjPoint& x, const Vec& u) {
  FaceDescriptor f;
  f.anchor = x;
  f.dim = body.dim();
  f.whole_body = true;
  f.origin_chart = u;
  f.frame = Mat::Identity(body.dim(), body.dim());
  Mat span(body.dim() + 1, body.dim() + 1);
  span.col(0) = body.chart().lift(u);
  span.rightCols(body.dim()) = body.chart().basis();
  f.span = span;
  f.sub_body = body;
  return f;
}

FaceDescriptor extremal_face(const ConvexBody& body, const ProjPoint& x, const Vec& u) {
  FaceDescriptor f;
  f.anchor = x;
  f.dim = 0;
  f.origin_chart = u;
  f.frame = Mat(body.dim(), 0);
  f.span = body.chart().lift(u);
  return f;
}

// Minimal sub-body for the face {origin + frame * s} cut out by the inactive
// constraints. For dim 1 and 2 the representation is reduced to the exact
// interval / polygon.
std::optional<ConvexBody> face_sub_body(const Mat& a_in, const Vec& slack, int k) {
  if (k == 1) {
    double lo = -1e300, hi = 1e300;
    for (int i = 0; i < a_in.rows(); ++i) {
      double c = a_in(i, 0);
      if (c > 1e-12) hi = std::min(hi, slack[i] / c);
      if (c < -1e-12) lo = std::max(lo, slack[i] / c);
    }
    if (!(lo < 0.0 && hi > 0.0)) fail(ErrorCode::ComputeError, "face interval does not contain anchor");
    return ConvexBody::segment(lo, hi);
  }
  if (k == 2) {
    // Enumerate candidate vertices from constraint pairs and rebuild the
    // polygon, which also prunes redundant rows.
    std::vector<Vec> cand;
    const int m = static_cast<int>(a_in.rows());
    for (int i = 0; i < m; ++i) {
      for (int j = i + 1; j < m; ++j) {
        Mat s(2, 2);
        s.row(0) = a_in.row(i);
        s.row(1) = a_in.row(j);
        if (std::abs(s.determinant()) < 1e-12) continue;
        Vec rhs(2);
        rhs << slack[i], slack[j];
        Vec v = s.partialPivLu().solve(rhs);
        if (((slack - a_in * v).minCoeff()) >= -1e-9) cand.push_back(v);
      }
    }
    if (cand.size() < 3) fail(ErrorCode::ComputeError, "face polygon degenerate");
    return ConvexBody::hull_body(std::move(cand), AffineChart::standard(2));
  }
  Vec base = Vec::Zero(k);
  return ConvexBody::hpolytope(a_in, slack, AffineChart::standard(k), base);
}

FaceDescriptor polytope_face(const ConvexBody& body, const ProjPoint& x, const Vec& u) {
  const Mat& a = body.A();
  const Vec& b = body.b();
  const double act = activity_scale(u);
  Vec slack = b - a * u;

  std::vector<int> active;
  for (int i = 0; i < a.rows(); ++i) {
    if (slack[i] <= act) active.push_back(i);
  }
  if (active.empty()) return whole_body_face(body, x, u);

  Mat a_act(active.size(), body.dim());
  for (size_t i = 0; i < active.size(); ++i) a_act.row(i) = a.row(active[i]);
  Eigen::JacobiSVD<Mat> svd(a_act, Eigen::ComputeFullV);
  const Vec& sv = svd.singularValues();
  int rank = 0;
  for (int i = 0; i < sv.size(); ++i) {
    if (sv[i] > 1e-8 * std::max(1.0, sv[0])) ++rank;
  }
  const int k = body.dim() - rank;

  FaceDescriptor f;
  f.anchor = x;
  f.dim = k;
  f.origin_chart = u;
  f.active = active;
  if (k == 0) {
    f.frame = Mat(body.dim(), 0);
    f.span = body.chart().lift(u);
    return f;
  }
  Mat n = svd.matrixV().rightCols(k);
  f.frame = n;
  Mat span(body.dim() + 1, k + 1);
  span.col(0) = body.chart().lift(u);
  for (int j = 0; j < k; ++j) span.col(1 + j) = body.chart().direction(n.col(j));
  f.span = span;

  // Inactive constraints restricted to the face plane.
  std::vector<int> rows;
  for (int i = 0; i < a.rows(); ++i) {
    bool is_active = std::binary_search(active.begin(), active.end(), i);
    if (is_active) continue;
    if ((a.row(i) * n).norm() <= 1e-12) continue;  // parallel to the face
    rows.push_back(i);
  }
  Mat a_in(rows.size(), k);
  Vec s_in(rows.size());
  for (size_t i = 0; i < rows.size(); ++i) {
    a_in.row(i) = a.row(rows[i]) * n;
    s_in[i] = slack[rows[i]];
  }
  f.sub_body = face_sub_body(a_in, s_in, k);
  return f;
}

}  // namespace

FaceDescriptor face_of(const ConvexBody& body, const ProjPoint& x) {
  Vec u = body.chart().to_chart(x);
  double m = body.margin(u);
  const double act = activity_scale(u);
  if (m < -act) fail(ErrorCode::OutsideClosure, "point is outside the body closure");
  if (m > act) return whole_body_face(body, x, u);

  if (body.kind() == BodyKind::Ellipsoid) return extremal_face(body, x, u);

  if (body.kind() == BodyKind::OmegaF) {
    const OmegaFInfo& info = body.omega_info();
    if (auto k = info.vertical_face_index(u)) {
      double fk = info.grid_values[*k];
      double z = u[2];
      if (std::abs(std::abs(z) - fk) <= tol::active * (1.0 + fk)) {
        return extremal_face(body, x, u);  // generator point
      }
      FaceDescriptor f;
      f.anchor = x;
      f.dim = 1;
      f.origin_chart = u;
      f.frame = Mat::Zero(3, 1);
      f.frame(2, 0) = 1.0;
      Mat span(4, 2);
      span.col(0) = body.chart().lift(u);
      span.col(1) = body.chart().direction(f.frame.col(0));
      f.span = span;
      f.sub_body = ConvexBody::segment(-fk - z, fk - z);
      return f;
    }
  }

  return polytope_face(body, x, u);
}

bool face_contains(const FaceDescriptor& face, const Vec& u) {
  const double eps = 1e-8 * (1.0 + u.norm());
  if (face.whole_body) {
    return face.sub_body->margin(u) > 0.0;
  }
  if (face.dim == 0) return (u - face.origin_chart).norm() <= eps;
  Vec s = face.frame.transpose() * (u - face.origin_chart);
  double residual = (u - face.origin_chart - face.frame * s).norm();
  if (residual > eps) return false;
  return face.sub_body->margin(s) > 0.0;
}

bool same_face(const FaceDescriptor& f1, const FaceDescriptor& f2) {
  if (f1.dim != f2.dim || f1.whole_body != f2.whole_body) return false;
  return face_contains(f1, f2.origin_chart) && face_contains(f2, f1.origin_chart);
}

ClosurePoint classify(const ConvexBody& body, const ProjPoint& p) {
  Vec u = body.chart().to_chart(p);
  double m = body.margin(u);
  const double act = activity_scale(u);
  if (m < -act) fail(ErrorCode::OutsideClosure, "point is outside the body closure");
  ClosurePoint cp;
  cp.point = p;
  cp.chart = u;
  if (m > act) {
    cp.interior = true;
    return cp;
  }
  cp.interior = false;
  cp.face = std::make_shared<FaceDescriptor>(face_of(body, p));
  return cp;
}

ExtendedDistance extended_distance(const ConvexBody& body, const ClosurePoint& x,
                                   const ClosurePoint& y) {
  if (x.interior && y.interior) {
    return {hilbert_distance_chart(body, x.chart, y.chart)};
  }
  if (x.interior != y.interior) return ExtendedDistance::infinite();
  if (x.point.approx_equal(y.point)) return {0.0};
  const FaceDescriptor& fx = *x.face;
  if (fx.dim == 0) return ExtendedDistance::infinite();
  if (!face_contains(fx, y.chart)) return ExtendedDistance::infinite();
  Vec s = fx.frame.transpose() * (y.chart - fx.origin_chart);
  return {hilbert_distance_chart(*fx.sub_body, Vec::Zero(fx.dim), s)};
}

ExtendedDistance extended_distance(const ConvexBody& body, const ProjPoint& x,
                                   const ProjPoint& y) {
  return extended_distance(body, classify(body, x), classify(body, y));
}

}  // namespace hilbert
