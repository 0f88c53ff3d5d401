#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "hilbert/balls.hpp"
#include "hilbert/errors.hpp"
#include "hilbert/faces.hpp"

using namespace hktest;
using doctest::Approx;

TEST_CASE("face_of on the square: edge, corner, interior") {
  ConvexBody sq = unit_square();

  FaceDescriptor edge = face_of(sq, chart_point(sq, {1.0, 0.3}));
  CHECK(edge.dim == 1);
  REQUIRE(edge.sub_body.has_value());
  // the edge is {1} x (-1, 1): anchor at 0.3, so extents -1.3 and 0.7
  CHECK(edge.sub_body->margin(vec({0.0})) == Approx(0.7).epsilon(1e-9));

  FaceDescriptor corner = face_of(sq, chart_point(sq, {1.0, 1.0}));
  CHECK(corner.dim == 0);

  FaceDescriptor inside = face_of(sq, chart_point(sq, {0.2, -0.1}));
  CHECK(inside.dim == 2);
  CHECK(inside.whole_body);

  CHECK_THROWS_AS(face_of(sq, chart_point(sq, {1.5, 0.0})), Error);
}

TEST_CASE("ellipsoid boundary points are extremal") {
  ConvexBody disk = unit_disk();
  FaceDescriptor f = face_of(disk, chart_point(disk, {1.0, 0.0}));
  CHECK(f.dim == 0);
  double s = std::sqrt(0.5);
  CHECK(face_of(disk, chart_point(disk, {s, s})).dim == 0);
}

TEST_CASE("cube faces: facet has dimension 2, edge 1, vertex 0") {
  ConvexBody cube = unit_cube();
  CHECK(face_of(cube, chart_point(cube, {1.0, 0.2, -0.3})).dim == 2);
  CHECK(face_of(cube, chart_point(cube, {1.0, 1.0, 0.4})).dim == 1);
  CHECK(face_of(cube, chart_point(cube, {1.0, 1.0, 1.0})).dim == 0);

  // the facet's sub-body is the square: distances match the 2-d square body
  FaceDescriptor facet = face_of(cube, chart_point(cube, {1.0, 0.0, 0.0}));
  REQUIRE(facet.sub_body.has_value());
  ConvexBody sq = unit_square();
  Vec s1 = vec({0.1, 0.2}), s2 = vec({-0.4, 0.3});
  CHECK(hilbert_distance_chart(*facet.sub_body, s1, s2) ==
        Approx(hilbert_distance_chart(sq, s1, s2)).epsilon(1e-9));
}

TEST_CASE("extended distance: finite on a common face, infinite across faces") {
  ConvexBody sq = unit_square();
  ClosurePoint x = classify(sq, chart_point(sq, {1.0, 0.0}));
  ClosurePoint y = classify(sq, chart_point(sq, {1.0, 0.5}));
  ExtendedDistance d = extended_distance(sq, x, y);
  REQUIRE(d.finite());
  // on the edge (-1,1) from 0 to 0.5: ((1-0)(1+0.5))/((1+0)(1-0.5)) = 3
  CHECK(d.value == Approx(0.5 * std::log(3.0)).epsilon(1e-9));

  ClosurePoint z = classify(sq, chart_point(sq, {0.0, 1.0}));
  CHECK_FALSE(extended_distance(sq, x, z).finite());

  // boundary point to itself
  CHECK(extended_distance(sq, x, x).value == 0.0);

  // interior-boundary pairs are infinite
  ClosurePoint o = classify(sq, chart_point(sq, {0.0, 0.0}));
  CHECK_FALSE(extended_distance(sq, o, x).finite());

  // interior pairs agree with the plain distance
  ClosurePoint p = classify(sq, chart_point(sq, {0.3, 0.3}));
  CHECK(extended_distance(sq, o, p).value ==
        Approx(hilbert_distance_chart(sq, vec({0, 0}), vec({0.3, 0.3}))).epsilon(1e-12));
}

TEST_CASE("corner-to-corner and corner-to-edge distances are infinite") {
  ConvexBody sq = unit_square();
  ClosurePoint c1 = classify(sq, chart_point(sq, {1.0, 1.0}));
  ClosurePoint c2 = classify(sq, chart_point(sq, {1.0, -1.0}));
  ClosurePoint e = classify(sq, chart_point(sq, {1.0, 0.0}));
  CHECK_FALSE(extended_distance(sq, c1, c2).finite());
  CHECK_FALSE(extended_distance(sq, c1, e).finite());
  CHECK_FALSE(extended_distance(sq, e, c1).finite());
  CHECK(extended_distance(sq, c1, c1).value == 0.0);
}

TEST_CASE("faces partition: points of a face share it; symmetry holds") {
  ConvexBody cube = unit_cube();
  Rng rng(17);
  for (int t = 0; t < 40; ++t) {
    Vec dir = rng.direction(3);
    Vec u = boundary_ray_chart(cube, Vec::Zero(3), dir);
    FaceDescriptor f = face_of(cube, cube.chart().from_chart(u));
    if (f.dim == 0) continue;
    // sample the face through its sub-body and check each sample's face
    for (int i = 0; i < 6; ++i) {
      Vec s = 0.8 * rng.uniform() *
              boundary_ray_chart(*f.sub_body, Vec::Zero(f.dim), rng.direction(f.dim));
      Vec v = f.origin_chart + f.frame * s;
      FaceDescriptor g = face_of(cube, cube.chart().from_chart(v));
      CHECK(same_face(f, g));
      CHECK(face_contains(f, v));
      CHECK(face_contains(g, u));
    }
  }
}

TEST_CASE("restriction consistency: edge metric equals the segment body") {
  ConvexBody sq = unit_square();
  ConvexBody seg = ConvexBody::segment(-1.0, 1.0);
  Rng rng(19);
  for (int i = 0; i < 100; ++i) {
    double z1 = rng.uniform(-0.95, 0.95), z2 = rng.uniform(-0.95, 0.95);
    ClosurePoint x = classify(sq, chart_point(sq, {1.0, z1}));
    ClosurePoint y = classify(sq, chart_point(sq, {1.0, z2}));
    double expected = hilbert_distance_chart(seg, vec({z1}), vec({z2}));
    CHECK(std::abs(extended_distance(sq, x, y).value - expected) < 1e-8);
  }
}

TEST_CASE("classify tags interior and boundary consistently") {
  ConvexBody disk = unit_disk();
  CHECK(classify(disk, chart_point(disk, {0.2, 0.2})).interior);
  ClosurePoint b = classify(disk, chart_point(disk, {0.0, 1.0}));
  CHECK_FALSE(b.interior);
  REQUIRE(b.face);
  CHECK(b.face->dim == 0);
  CHECK_THROWS_AS(classify(disk, chart_point(disk, {1.1, 0.0})), Error);
}
