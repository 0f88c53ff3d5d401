#include "hilbert/convex_body.hpp"

#include <algorithm>
#include <cmath>

#include "hilbert/errors.hpp"
#include "hilbert/hull.hpp"
#include "hilbert/sampling.hpp"
#include "hilbert/tolerances.hpp"

namespace hilbert {

struct ConvexBody::Impl {
  BodyKind kind;
  AffineChart chart;
  Vec base_chart;
  ProjPoint base;
  // polytope-like
  Mat A;
  Vec b;
  // ellipsoid
  Vec center;
  Mat shape;
  // hull
  std::vector<Vec> hull_vertices;
  // omega_f
  std::shared_ptr<const OmegaFInfo> omega;

  Impl(BodyKind k, AffineChart c, Vec bc)
      : kind(k), chart(std::move(c)), base_chart(std::move(bc)),
        base(chart.lift(base_chart)) {}
};

namespace {

// Rows scaled to unit norm; zero rows with nonnegative offset dropped.
void normalize_rows(Mat& a, Vec& b) {
  std::vector<int> keep;
  for (int i = 0; i < a.rows(); ++i) {
    double n = a.row(i).norm();
    if (n <= 1e-14) {
      if (b[i] < 0.0) fail(ErrorCode::BadSpec, "infeasible zero constraint row");
      continue;
    }
    a.row(i) /= n;
    b[i] /= n;
    keep.push_back(i);
  }
  if (static_cast<int>(keep.size()) != a.rows()) {
    Mat a2(keep.size(), a.cols());
    Vec b2(keep.size());
    for (size_t i = 0; i < keep.size(); ++i) {
      a2.row(i) = a.row(keep[i]);
      b2[i] = b[keep[i]];
    }
    a = a2;
    b = b2;
  }
}

void dedup_rows(Mat& a, Vec& b) {
  std::vector<int> keep;
  for (int i = 0; i < a.rows(); ++i) {
    bool dup = false;
    for (int j : keep) {
      if ((a.row(i) - a.row(j)).norm() <= 1e-10 && std::abs(b[i] - b[j]) <= 1e-10) {
        dup = true;
        break;
      }
    }
    if (!dup) keep.push_back(i);
  }
  if (static_cast<int>(keep.size()) != a.rows()) {
    Mat a2(keep.size(), a.cols());
    Vec b2(keep.size());
    for (size_t i = 0; i < keep.size(); ++i) {
      a2.row(i) = a.row(keep[i]);
      b2[i] = b[keep[i]];
    }
    a = a2;
    b = b2;
  }
}

// A polytope with unit-norm rows is bounded iff the row normals positively
// span the space.
bool rows_positively_span(const Mat& a) {
  const int d = static_cast<int>(a.cols());
  const int m = static_cast<int>(a.rows());
  if (d == 1) {
    bool pos = false, neg = false;
    for (int i = 0; i < m; ++i) {
      if (a(i, 0) > 0.5) pos = true;
      if (a(i, 0) < -0.5) neg = true;
    }
    return pos && neg;
  }
  if (d == 2) {
    std::vector<double> ang(m);
    for (int i = 0; i < m; ++i) ang[i] = std::atan2(a(i, 1), a(i, 0));
    std::sort(ang.begin(), ang.end());
    double gap = ang.front() + 2.0 * M_PI - ang.back();
    for (int i = 1; i < m; ++i) gap = std::max(gap, ang[i] - ang[i - 1]);
    return gap < M_PI - 1e-9;
  }
  if (d == 3) {
    std::vector<Vec> normals;
    normals.reserve(m);
    for (int i = 0; i < m; ++i) normals.push_back(a.row(i).transpose());
    try {
      HullResult h = convex_hull(normals);
      double inner = 1e300;
      for (int f = 0; f < h.b.size(); ++f) inner = std::min(inner, h.b[f]);
      return inner > 1e-9;
    } catch (const Error&) {
      return false;  // normals do not span
    }
  }
  // Sampled check in higher dimension.
  for (int k = 0; k < 4096; ++k) {
    Vec w = halton_direction(k, d);
    double mx = -1e300;
    for (int i = 0; i < m; ++i) mx = std::max(mx, a.row(i).dot(w));
    if (mx <= 1e-9) return false;
  }
  return true;
}

double polytope_margin(const Mat& a, const Vec& b, const Vec& u) {
  return (b - a * u).minCoeff();
}

}  // namespace

ConvexBody ConvexBody::hpolytope(Mat a, Vec b, AffineChart chart, Vec base_chart) {
  if (a.rows() != b.size()) fail(ErrorCode::BadSpec, "A and b row counts differ");
  if (a.cols() != chart.dim()) fail(ErrorCode::BadSpec, "A columns must match chart dimension");
  normalize_rows(a, b);
  dedup_rows(a, b);
  if (a.rows() < chart.dim() + 1) fail(ErrorCode::BadSpec, "too few constraints for a bounded body");
  if (!rows_positively_span(a)) fail(ErrorCode::BadSpec, "polytope is unbounded in its chart");
  auto impl = std::make_shared<Impl>(BodyKind::HPolytope, std::move(chart), std::move(base_chart));
  impl->A = std::move(a);
  impl->b = std::move(b);
  if (polytope_margin(impl->A, impl->b, impl->base_chart) < tol::base_margin) {
    fail(ErrorCode::NotInterior, "base point lacks the required interior margin");
  }
  return ConvexBody(std::move(impl));
}

ConvexBody ConvexBody::ellipsoid(Vec center, Mat shape, AffineChart chart) {
  if (center.size() != chart.dim() || shape.rows() != chart.dim() || shape.cols() != chart.dim()) {
    fail(ErrorCode::BadSpec, "ellipsoid data must match chart dimension");
  }
  Mat sym = 0.5 * (shape + shape.transpose());
  Eigen::LLT<Mat> llt(sym);
  if (llt.info() != Eigen::Success) {
    fail(ErrorCode::BadSpec, "ellipsoid shape matrix must be positive definite");
  }
  auto impl = std::make_shared<Impl>(BodyKind::Ellipsoid, std::move(chart), center);
  impl->center = std::move(center);
  impl->shape = std::move(sym);
  return ConvexBody(std::move(impl));
}

ConvexBody ConvexBody::hull_body(std::vector<Vec> points, AffineChart chart) {
  if (points.empty()) fail(ErrorCode::BadSpec, "hull body needs points");
  if (static_cast<int>(points[0].size()) != chart.dim()) {
    fail(ErrorCode::BadSpec, "hull points must match chart dimension");
  }
  HullResult h = convex_hull(points);
  std::vector<Vec> verts;
  verts.reserve(h.vertices.size());
  Vec centroid = Vec::Zero(chart.dim());
  for (int i : h.vertices) {
    verts.push_back(points[i]);
    centroid += points[i];
  }
  centroid /= static_cast<double>(verts.size());
  auto impl = std::make_shared<Impl>(BodyKind::Hull, std::move(chart), centroid);
  impl->A = std::move(h.A);
  impl->b = std::move(h.b);
  impl->hull_vertices = std::move(verts);
  if (polytope_margin(impl->A, impl->b, impl->base_chart) < tol::base_margin) {
    fail(ErrorCode::NotInterior, "hull centroid lacks the required interior margin");
  }
  return ConvexBody(std::move(impl));
}

ConvexBody ConvexBody::segment(double lo, double hi) {
  if (!(lo < hi)) fail(ErrorCode::BadSpec, "segment needs lo < hi");
  Mat a(2, 1);
  Vec b(2);
  a << 1.0, -1.0;
  b << hi, -lo;
  Vec base(1);
  base << 0.5 * (lo + hi);
  return hpolytope(a, b, AffineChart::standard(1), base);
}

ConvexBody ConvexBody::omega_f_body(Mat a, Vec b, AffineChart chart, Vec base_chart,
                                    std::shared_ptr<const OmegaFInfo> info,
                                    std::vector<Vec> hull_vertices) {
  normalize_rows(a, b);
  dedup_rows(a, b);
  auto impl = std::make_shared<Impl>(BodyKind::OmegaF, std::move(chart), std::move(base_chart));
  impl->A = std::move(a);
  impl->b = std::move(b);
  impl->omega = std::move(info);
  impl->hull_vertices = std::move(hull_vertices);
  if (polytope_margin(impl->A, impl->b, impl->base_chart) < tol::base_margin) {
    fail(ErrorCode::NotInterior, "base point lacks the required interior margin");
  }
  return ConvexBody(std::move(impl));
}

BodyKind ConvexBody::kind() const { return impl_->kind; }
int ConvexBody::dim() const { return impl_->chart.dim(); }
const AffineChart& ConvexBody::chart() const { return impl_->chart; }
const ProjPoint& ConvexBody::base() const { return impl_->base; }
const Vec& ConvexBody::base_chart() const { return impl_->base_chart; }

double ConvexBody::margin(const Vec& u) const {
  switch (impl_->kind) {
    case BodyKind::Ellipsoid: {
      Vec v = u - impl_->center;
      double q = v.dot(impl_->shape * v);
      double t = std::sqrt(std::max(q, 0.0));
      if (t <= 1e-14) {
        Eigen::SelfAdjointEigenSolver<Mat> es(impl_->shape);
        return 1.0 / std::sqrt(es.eigenvalues().maxCoeff());
      }
      return v.norm() * (1.0 - t) / t;
    }
    default:
      return polytope_margin(impl_->A, impl_->b, u);
  }
}

bool ConvexBody::has_hrep() const { return impl_->kind != BodyKind::Ellipsoid; }

const Mat& ConvexBody::A() const {
  if (!has_hrep()) fail(ErrorCode::BadSpec, "ellipsoid has no H-representation");
  return impl_->A;
}

const Vec& ConvexBody::b() const {
  if (!has_hrep()) fail(ErrorCode::BadSpec, "ellipsoid has no H-representation");
  return impl_->b;
}

const Vec& ConvexBody::center() const {
  if (impl_->kind != BodyKind::Ellipsoid) fail(ErrorCode::BadSpec, "not an ellipsoid");
  return impl_->center;
}

const Mat& ConvexBody::shape() const {
  if (impl_->kind != BodyKind::Ellipsoid) fail(ErrorCode::BadSpec, "not an ellipsoid");
  return impl_->shape;
}

const std::vector<Vec>& ConvexBody::hull_vertices() const {
  if (impl_->hull_vertices.empty()) fail(ErrorCode::BadSpec, "body carries no vertex list");
  return impl_->hull_vertices;
}

const OmegaFInfo& ConvexBody::omega_info() const {
  if (!impl_->omega) fail(ErrorCode::BadSpec, "not an omega_f body");
  return *impl_->omega;
}

std::shared_ptr<const OmegaFInfo> ConvexBody::omega_info_ptr() const {
  if (!impl_->omega) fail(ErrorCode::BadSpec, "not an omega_f body");
  return impl_->omega;
}

}  // namespace hilbert
