#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hilbert/projective.hpp"

using namespace hilbert;

TEST_CASE("canonical representative: unit norm, first nonzero positive") {
  Vec v(3);
  v << -2.0, 0.0, 4.0;
  ProjPoint p(v);
  CHECK(p.coords().norm() == doctest::Approx(1.0));
  CHECK(p.coords()[0] > 0.0);
  // canonicalization is idempotent
  ProjPoint q(p.coords());
  CHECK(p.approx_equal(q, 1e-15));
}

TEST_CASE("projective point equality ignores scale and sign") {
  Vec v(3);
  v << 1.0, 2.0, -3.0;
  ProjPoint p(v);
  ProjPoint q(Vec(-7.5 * v));
  CHECK(p.approx_equal(q));
}

TEST_CASE("zero vector is rejected") {
  CHECK_THROWS_AS(ProjPoint(Vec::Zero(3)), Error);
}

TEST_CASE("standard chart reads off plain coordinates") {
  AffineChart c = AffineChart::standard(2);
  Vec v(3);
  v << 0.25, -0.5, 1.0;
  Vec u = c.to_chart(ProjPoint(v));
  CHECK(u[0] == doctest::Approx(0.25));
  CHECK(u[1] == doctest::Approx(-0.5));
  ProjPoint back = c.from_chart(u);
  CHECK(back.approx_equal(ProjPoint(v)));
}

TEST_CASE("general chart round-trips and has an orthonormal frame") {
  Vec l(3);
  l << 1.0, 1.0, 1.0;
  AffineChart c{l};
  Mat gram = c.basis().transpose() * c.basis();
  CHECK((gram - Mat::Identity(2, 2)).norm() < 1e-12);
  CHECK(c.functional(c.origin()) == doctest::Approx(1.0));
  Vec u(2);
  u << 0.3, -0.1;
  CHECK((c.to_chart(c.from_chart(u)) - u).norm() < 1e-12);
}

TEST_CASE("chart rejects points across the hyperplane at infinity") {
  AffineChart c = AffineChart::standard(2);
  Vec v(3);
  v << 1.0, 0.0, 0.0;  // l(x) = 0
  CHECK_THROWS_AS(c.to_chart(ProjPoint(v)), Error);
}

TEST_CASE("transform normalization is idempotent and sign-fixed") {
  Mat m(3, 3);
  m << 0.0, -4.0, 0.0, 2.0, 0.0, 0.0, 0.0, 0.0, 1.0;
  ProjTransform g(m);
  CHECK(g.matrix().cwiseAbs().maxCoeff() == doctest::Approx(1.0));
  ProjTransform g2(g.matrix());
  CHECK(g.approx_equal(g2, 1e-15));
  // first nonzero entry (row-major) is positive
  CHECK(g.matrix()(0, 1) > 0.0);
}

TEST_CASE("inverse and composition act correctly on points") {
  Mat m(3, 3);
  m << 2.0, 1.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 1.0;
  ProjTransform g(m);
  Vec v(3);
  v << 0.2, 0.4, 1.0;
  ProjPoint p(v);
  ProjPoint q = g.inverse().apply(g.apply(p));
  CHECK(q.approx_equal(p));
  ProjTransform gg = g * g.inverse();
  CHECK(gg.approx_equal(ProjTransform::identity(2)));
}

TEST_CASE("singular matrices are rejected") {
  Mat m = Mat::Zero(3, 3);
  m(0, 0) = 1.0;
  m(1, 1) = 1.0;
  CHECK_THROWS_AS(ProjTransform{m}, Error);
}
