#pragma once

#include <cmath>
#include <initializer_list>

#include "hilbert/convex_body.hpp"
#include "hilbert/metric.hpp"
#include "hilbert/sampling.hpp"

namespace hktest {

using namespace hilbert;

inline Vec vec(std::initializer_list<double> coords) {
  Vec v(static_cast<int>(coords.size()));
  int i = 0;
  for (double c : coords) v[i++] = c;
  return v;
}

inline ConvexBody unit_disk() {
  return ConvexBody::ellipsoid(Vec::Zero(2), Mat::Identity(2, 2), AffineChart::standard(2));
}

inline ConvexBody unit_square() {
  Mat a(4, 2);
  Vec b(4);
  a << 1, 0, -1, 0, 0, 1, 0, -1;
  b << 1, 1, 1, 1;
  return ConvexBody::hpolytope(a, b, AffineChart::standard(2), Vec::Zero(2));
}

inline ConvexBody unit_cube() {
  Mat a(6, 3);
  Vec b(6);
  a << 1, 0, 0, -1, 0, 0, 0, 1, 0, 0, -1, 0, 0, 0, 1, 0, 0, -1;
  b << 1, 1, 1, 1, 1, 1;
  return ConvexBody::hpolytope(a, b, AffineChart::standard(3), Vec::Zero(3));
}

/// The open 2-simplex {[x:y:z] : x,y,z > 0} in the chart x + y + z = 1.
inline ConvexBody standard_simplex() {
  AffineChart chart(vec({1, 1, 1}));
  Mat a(3, 2);
  Vec b(3);
  for (int i = 0; i < 3; ++i) {
    Vec row = -chart.basis().row(i).transpose();
    a.row(i) = row.transpose();
    b[i] = chart.origin()[i];
  }
  return ConvexBody::hpolytope(a, b, chart, Vec::Zero(2));
}

inline ProjPoint chart_point(const ConvexBody& body, std::initializer_list<double> coords) {
  return body.chart().from_chart(vec(coords));
}

/// Random interior point: a random fraction of a random ray from the base.
inline Vec random_interior(const ConvexBody& body, Rng& rng, double max_frac = 0.95) {
  Vec dir = rng.direction(body.dim());
  Vec edge = boundary_ray_chart(body, body.base_chart(), dir);
  double frac = max_frac * rng.uniform();
  return body.base_chart() + frac * (edge - body.base_chart());
}

/// Random invertible matrix close enough to identity to be well conditioned.
inline Mat random_transform_matrix(int n, Rng& rng, double spread = 0.4) {
  while (true) {
    Mat m = Mat::Identity(n, n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) m(i, j) += spread * rng.normal();
    }
    if (std::abs(m.determinant()) > 0.1) return m;
  }
}

}  // namespace hktest
