#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "hilbert/errors.hpp"
#include "hilbert/metric.hpp"

using namespace hktest;
using doctest::Approx;

TEST_CASE("boundary_ray: disk, square corner, anisotropic ellipsoid") {
  ConvexBody disk = unit_disk();
  Vec hit = boundary_ray_chart(disk, vec({0, 0}), vec({1, 0}));
  CHECK(hit[0] == Approx(1.0).epsilon(1e-12));
  CHECK(hit[1] == Approx(0.0).epsilon(1e-12));

  ConvexBody sq = unit_square();
  hit = boundary_ray_chart(sq, vec({0, 0}), vec({1, 1}));
  CHECK(hit[0] == Approx(1.0).epsilon(1e-12));
  CHECK(hit[1] == Approx(1.0).epsilon(1e-12));

  // x^2 + 4 y^2 < 1, ray up from the centre exits at (0, 1/2): 4 y^2 = 1.
  ConvexBody ell = ConvexBody::ellipsoid(vec({0, 0}), (Mat(2, 2) << 1, 0, 0, 4).finished(),
                                         AffineChart::standard(2));
  hit = boundary_ray_chart(ell, vec({0, 0}), vec({0, 1}));
  CHECK(hit[1] == Approx(0.5).epsilon(1e-12));
}

TEST_CASE("boundary_ray: bisection agrees with closed form") {
  ConvexBody ell = ConvexBody::ellipsoid(vec({0.1, -0.2}), (Mat(2, 2) << 2, 0.3, 0.3, 1).finished(),
                                         AffineChart::standard(2));
  Rng rng(3);
  for (int i = 0; i < 50; ++i) {
    Vec dir = rng.direction(2);
    Vec a = boundary_ray_chart(ell, vec({0.1, -0.2}), dir, RayMethod::ClosedForm);
    Vec b = boundary_ray_chart(ell, vec({0.1, -0.2}), dir, RayMethod::Bisection);
    CHECK((a - b).norm() < 1e-10);
  }
}

TEST_CASE("boundary_ray rejects exterior origins and zero directions") {
  ConvexBody disk = unit_disk();
  CHECK_THROWS_AS(boundary_ray_chart(disk, vec({2, 0}), vec({1, 0})), Error);
  CHECK_THROWS_AS(boundary_ray_chart(disk, vec({0, 0}), vec({0, 0})), Error);
}

TEST_CASE("chord endpoints are aligned a, x, y, b") {
  ConvexBody disk = unit_disk();
  Chord c = chord(disk, chart_point(disk, {-0.2, 0}), chart_point(disk, {0.3, 0}));
  Vec a = disk.chart().to_chart(c.a), b = disk.chart().to_chart(c.b);
  CHECK(a[0] == Approx(-1.0).epsilon(1e-12));
  CHECK(b[0] == Approx(1.0).epsilon(1e-12));

  ConvexBody sq = unit_square();
  c = chord(sq, chart_point(sq, {0, 0}), chart_point(sq, {0.5, 0.5}));
  a = sq.chart().to_chart(c.a);
  b = sq.chart().to_chart(c.b);
  CHECK((a - vec({-1, -1})).norm() < 1e-12);
  CHECK((b - vec({1, 1})).norm() < 1e-12);

  c = chord(disk, chart_point(disk, {0, 0}), chart_point(disk, {0, 0.5}));
  CHECK((disk.chart().to_chart(c.a) - vec({0, -1})).norm() < 1e-12);
  CHECK((disk.chart().to_chart(c.b) - vec({0, 1})).norm() < 1e-12);

  CHECK_THROWS_AS(chord(disk, chart_point(disk, {0.1, 0}), chart_point(disk, {0.1, 0})), Error);
}

TEST_CASE("cross_ratio: hand values, degenerate conventions, collinearity") {
  // equally spaced points 0,1,2,3: (2*2)/(1*1) = 4
  CHECK(cross_ratio(vec({0, 0}), vec({1, 0}), vec({2, 0}), vec({3, 0})) == Approx(4.0));
  // x = y gives 1
  CHECK(cross_ratio(vec({0, 0}), vec({1, 0}), vec({1, 0}), vec({3, 0})) == Approx(1.0));
  // a = x gives the infinity sentinel
  CHECK(std::isinf(cross_ratio(vec({1, 0}), vec({1, 0}), vec({2, 0}), vec({3, 0}))));
  CHECK_THROWS_AS(cross_ratio(vec({0, 0}), vec({1, 0.5}), vec({2, 0}), vec({3, 0})), Error);
}

TEST_CASE("hilbert_distance: Klein value on the disk and the segment") {
  ConvexBody disk = unit_disk();
  double d = hilbert_distance(disk, chart_point(disk, {0, 0}), chart_point(disk, {0.5, 0}));
  CHECK(d == Approx(0.5 * std::log(3.0)).epsilon(1e-12));
  CHECK(d == Approx(std::atanh(0.5)).epsilon(1e-12));

  CHECK(hilbert_distance(disk, chart_point(disk, {0.3, 0.2}), chart_point(disk, {0.3, 0.2})) ==
        0.0);

  ConvexBody seg = ConvexBody::segment(-1.0, 1.0);
  double ds = hilbert_distance_chart(seg, vec({0}), vec({0.5}));
  CHECK(ds == Approx(0.5 * std::log(3.0)).epsilon(1e-12));
}

TEST_CASE("klein oracle on random ellipsoids, closed form and bisection") {
  Rng rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    Mat l = random_transform_matrix(2, rng, 0.3);
    Mat m = l.transpose() * l;
    Vec c(2);
    c << rng.uniform(-0.3, 0.3), rng.uniform(-0.3, 0.3);
    ConvexBody ell = ConvexBody::ellipsoid(c, m, AffineChart::standard(2));
    for (int i = 0; i < 20; ++i) {
      Vec y = random_interior(ell, rng);
      double mah = std::sqrt((y - c).dot(m * (y - c)));
      double expected = std::atanh(std::min(mah, 1.0 - 1e-16));
      double closed = hilbert_distance_chart(ell, c, y, RayMethod::ClosedForm);
      double bisect = hilbert_distance_chart(ell, c, y, RayMethod::Bisection);
      CHECK(closed == Approx(expected).epsilon(0).scale(1).epsilon(1e-14));
      CHECK(std::abs(closed - expected) < 1e-8);
      CHECK(std::abs(bisect - expected) < 1e-6);
    }
  }
}

TEST_CASE("klein oracle for general pairs on the unit disk") {
  // cosh d = (1 - <x,y>) / sqrt((1-|x|^2)(1-|y|^2))
  ConvexBody disk = unit_disk();
  Rng rng(12);
  for (int i = 0; i < 100; ++i) {
    Vec x = random_interior(disk, rng), y = random_interior(disk, rng);
    double num = 1.0 - x.dot(y);
    double den = std::sqrt((1.0 - x.squaredNorm()) * (1.0 - y.squaredNorm()));
    double expected = std::acosh(std::max(1.0, num / den));
    CHECK(std::abs(hilbert_distance_chart(disk, x, y) - expected) < 1e-9);
  }
}

TEST_CASE("metric axioms: symmetry and triangle inequality per body kind") {
  Rng rng(21);
  std::vector<ConvexBody> bodies = {unit_disk(), unit_square(), standard_simplex()};
  {
    std::vector<Vec> pts;
    for (int i = 0; i < 9; ++i) {
      Vec p(2);
      p << std::cos(2 * M_PI * i / 9.0) + 0.1 * rng.normal(),
          std::sin(2 * M_PI * i / 9.0) + 0.1 * rng.normal();
      pts.push_back(p);
    }
    bodies.push_back(ConvexBody::hull_body(pts, AffineChart::standard(2)));
  }
  for (const ConvexBody& body : bodies) {
    for (int i = 0; i < 200; ++i) {
      Vec x = random_interior(body, rng), y = random_interior(body, rng),
          z = random_interior(body, rng);
      double dxy = hilbert_distance_chart(body, x, y);
      double dyx = hilbert_distance_chart(body, y, x);
      double dxz = hilbert_distance_chart(body, x, z);
      double dzy = hilbert_distance_chart(body, z, y);
      CHECK(std::abs(dxy - dyx) < 1e-9);
      CHECK(dxy <= dxz + dzy + 1e-8);
    }
  }
}

TEST_CASE("projective invariance of the distance") {
  Rng rng(31);
  std::vector<ConvexBody> bodies = {unit_disk(), unit_square(), standard_simplex()};
  for (const ConvexBody& body : bodies) {
    for (int t = 0; t < 20; ++t) {
      ProjTransform g(random_transform_matrix(body.dim() + 1, rng));
      ConvexBody image = apply_transform_body(g, body);
      for (int i = 0; i < 10; ++i) {
        Vec u = random_interior(body, rng), v = random_interior(body, rng);
        ProjPoint x = body.chart().from_chart(u), y = body.chart().from_chart(v);
        double d0 = hilbert_distance(body, x, y);
        double d1 = hilbert_distance(image, g.apply(x), g.apply(y));
        CHECK(std::abs(d0 - d1) < 1e-8);
      }
    }
  }
}

TEST_CASE("transforming a body transports the oracle exactly") {
  Rng rng(41);
  ConvexBody sq = unit_square();
  ProjTransform g(random_transform_matrix(3, rng));
  ConvexBody img = apply_transform_body(g, sq);
  for (int i = 0; i < 200; ++i) {
    Vec u = vec({rng.uniform(-1.3, 1.3), rng.uniform(-1.3, 1.3)});
    if (std::abs(sq.margin(u)) < 1e-6) continue;  // skip points too close to the boundary
    ProjPoint p = sq.chart().from_chart(u);
    bool inside_before = sq.margin(u) > 0;
    bool inside_after = false;
    try {
      inside_after = img.margin(img.chart().to_chart(g.apply(p))) > 0;
    } catch (const Error&) {
      // crossed the image chart's hyperplane at infinity: certainly outside
    }
    CHECK(inside_before == inside_after);
  }
}

TEST_CASE("apply_transform basics: identity, eigenvector, simplex symmetry") {
  ProjTransform id = ProjTransform::identity(2);
  ProjPoint p(vec({0.3, -0.2, 1.0}));
  CHECK(id.apply(p).approx_equal(p));

  ProjTransform diag((Mat(3, 3) << 2, 0, 0, 0, 1, 0, 0, 0, 1).finished());
  ProjPoint e1(vec({1, 0, 0}));
  CHECK(diag.apply(e1).approx_equal(e1));

  // a coordinate permutation maps the simplex onto itself
  ConvexBody simplex = standard_simplex();
  Mat perm = Mat::Zero(3, 3);
  perm(0, 1) = perm(1, 2) = perm(2, 0) = 1.0;
  ProjTransform g(perm);
  Rng rng(5);
  for (int i = 0; i < 100; ++i) {
    Vec u = random_interior(simplex, rng);
    ProjPoint q = g.apply(simplex.chart().from_chart(u));
    CHECK(simplex.margin(simplex.chart().to_chart(q)) > 0.0);
  }
}

TEST_CASE("diagonal transforms are isometries of the simplex") {
  ConvexBody simplex = standard_simplex();
  Rng rng(51);
  for (int t = 0; t < 20; ++t) {
    double s = rng.uniform(-1.0, 1.0), w = rng.uniform(-1.0, 1.0);
    Mat m = Mat::Zero(3, 3);
    m(0, 0) = std::exp(s);
    m(1, 1) = std::exp(w);
    m(2, 2) = std::exp(-s - w);
    ProjTransform g(m);
    for (int i = 0; i < 20; ++i) {
      Vec u = random_interior(simplex, rng), v = random_interior(simplex, rng);
      ProjPoint x = simplex.chart().from_chart(u), y = simplex.chart().from_chart(v);
      double before = hilbert_distance(simplex, x, y);
      double after = hilbert_distance(simplex, g.apply(x), g.apply(y));
      CHECK(std::abs(before - after) < 1e-9);
    }
  }
}

TEST_CASE("hilbert balls are convex: chart midpoints stay inside") {
  Rng rng(61);
  std::vector<ConvexBody> bodies = {unit_disk(), unit_square(), standard_simplex()};
  for (const ConvexBody& body : bodies) {
    for (int t = 0; t < 40; ++t) {
      Vec o = random_interior(body, rng, 0.7);
      double radius = rng.uniform(0.2, 2.0);
      Vec d1 = rng.direction(2), d2 = rng.direction(2);
      Vec u = o + rng.uniform() * ball_extent(body, o, d1, radius) * d1;
      Vec v = o + rng.uniform() * ball_extent(body, o, d2, radius) * d2;
      Vec mid = 0.5 * (u + v);
      CHECK(hilbert_distance_chart(body, o, mid) <= radius + 1e-6);
    }
  }
}

TEST_CASE("ball_extent inverts the distance along rays") {
  ConvexBody sq = unit_square();
  Rng rng(71);
  for (int i = 0; i < 100; ++i) {
    Vec o = random_interior(sq, rng, 0.8);
    Vec dir = rng.direction(2);
    double radius = rng.uniform(0.1, 3.0);
    double s = ball_extent(sq, o, dir, radius);
    CHECK(hilbert_distance_chart(sq, o, Vec(o + s * dir)) == Approx(radius).epsilon(1e-10));
  }
}
