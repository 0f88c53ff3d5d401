#include "hilbert/balls.hpp"

#include <algorithm>
#include <cmath>

#include "hilbert/errors.hpp"
#include "hilbert/hull.hpp"
#include "hilbert/omega_f.hpp"
#include "hilbert/sampling.hpp"
#include "hilbert/tolerances.hpp"

namespace hilbert {

namespace {
constexpr double kProbeTol = 1e-8;
}

double ball_ratio(double r, double R) {
  if (!(0.0 < r && r < R)) fail(ErrorCode::BadRadii, "need 0 < r < R");
  return std::expm1(2.0 * R) / std::expm1(2.0 * r);
}

double face_ratio(double diam, double dist, double r) {
  if (!(dist > 1e-9)) fail(ErrorCode::BadSpec, "anchor sits on the relative boundary");
  return diam * (std::exp(2.0 * r) + 1.0) / (dist * std::expm1(2.0 * r));
}

namespace {

// Radial low-discrepancy samples of the closed R-ball of sub around the
// origin of its chart (fractions from the Halton base-7 sequence, sphere
// points interleaved).
std::vector<Vec> radial_ball_sample(const ConvexBody& sub, const Vec& centre, double R, int n) {
  std::vector<Vec> out;
  out.reserve(n);
  const int d = sub.dim();
  out.push_back(centre);
  for (int i = 1; i < n; ++i) {
    Vec dir = halton_direction(i, d);
    double s = ball_extent(sub, centre, dir, R);
    double frac = (i % 3 == 0) ? 1.0 : halton(i, 7);
    out.push_back(centre + frac * s * dir);
  }
  return out;
}

}  // namespace

std::vector<ClosurePoint> closure_ball_sample(const ConvexBody& body, const ClosurePoint& x,
                                              double R, int n) {
  if (!(R > 0.0)) fail(ErrorCode::BadRadii, "ball radius must be positive");
  std::vector<ClosurePoint> out;
  if (x.interior) {
    for (const Vec& u : radial_ball_sample(body, x.chart, R, n)) {
      ClosurePoint cp;
      cp.point = body.chart().from_chart(u);
      cp.chart = u;
      cp.interior = true;
      out.push_back(std::move(cp));
    }
    return out;
  }
  const FaceDescriptor& f = *x.face;
  if (f.dim == 0) {
    out.push_back(x);
    return out;
  }
  for (const Vec& s : radial_ball_sample(*f.sub_body, Vec::Zero(f.dim), R, n)) {
    Vec u = f.origin_chart + f.frame * s;
    ClosurePoint cp;
    cp.point = body.chart().from_chart(u);
    cp.chart = u;
    cp.interior = false;
    cp.face = x.face;
    out.push_back(std::move(cp));
  }
  return out;
}

FaceGeometry face_geometry(const FaceDescriptor& face) {
  if (face.dim == 0) return {0.0, 0.0};
  const ConvexBody& sub = *face.sub_body;
  FaceGeometry g;
  bool exact = (face.dim == 1 && sub.has_hrep()) ||
               (face.dim == 2 && sub.kind() == BodyKind::Hull);
  if (exact) {
    std::vector<Vec> verts;
    if (face.dim == 1) {
      // interval bounds from the 1-d H-rep
      double lo = -1e300, hi = 1e300;
      for (int i = 0; i < sub.A().rows(); ++i) {
        if (sub.A()(i, 0) > 0.5) hi = std::min(hi, sub.b()[i]);
        if (sub.A()(i, 0) < -0.5) lo = std::max(lo, -sub.b()[i]);
      }
      Vec a(1), b(1);
      a << lo;
      b << hi;
      verts = {a, b};
    } else {
      verts = sub.hull_vertices();
    }
    for (size_t i = 0; i < verts.size(); ++i) {
      for (size_t j = i + 1; j < verts.size(); ++j) {
        g.diameter = std::max(g.diameter, (verts[i] - verts[j]).norm());
      }
    }
    g.boundary_distance = sub.margin(Vec::Zero(face.dim));
    return g;
  }
  // Sampled fallback for higher-dimensional faces.
  double dist = 1e300;
  for (int i = 0; i < 256; ++i) {
    Vec dir = halton_direction(i, face.dim);
    Vec fwd = boundary_ray_chart(sub, Vec::Zero(face.dim), dir);
    Vec bwd = boundary_ray_chart(sub, Vec::Zero(face.dim), Vec(-dir));
    g.diameter = std::max(g.diameter, (fwd - bwd).norm());
    dist = std::min(dist, fwd.norm());
  }
  g.boundary_distance = dist;
  return g;
}

namespace {

// Closed-face samples in face coordinates: relative-boundary points from ray
// casts, plus interior low-discrepancy points.
std::vector<Vec> closed_face_samples(const ConvexBody& sub, int n) {
  std::vector<Vec> out;
  const int d = sub.dim();
  int half = std::max(4, n / 2);
  for (int i = 0; i < half; ++i) {
    out.push_back(boundary_ray_chart(sub, Vec::Zero(d), halton_direction(i, d)));
  }
  for (int i = half; i < n; ++i) {
    Vec dir = halton_direction(i, d);
    Vec edge = boundary_ray_chart(sub, Vec::Zero(d), dir);
    out.push_back(halton(i, 7) * edge);
  }
  if (sub.kind() == BodyKind::Hull && d == 2) {
    for (const Vec& v : sub.hull_vertices()) out.push_back(v);
  }
  return out;
}

}  // namespace

ProbeReport check_face_in_scaled_ball(const ConvexBody& body, const ClosurePoint& x, double r,
                                      int samples) {
  if (x.interior || !x.face) {
    fail(ErrorCode::BadSpec, "anchor must be a boundary point");
  }
  const FaceDescriptor& f = *x.face;
  if (f.dim == 0) fail(ErrorCode::ExtremalAnchor, "the statement is vacuous at extremal points");
  FaceGeometry g = face_geometry(f);
  double lambda = face_ratio(g.diameter, g.boundary_distance, r);

  ProbeReport rep;
  rep.name = "face-in-scaled-ball";
  rep.data["lambda"] = lambda;
  rep.data["diameter"] = g.diameter;
  rep.data["boundary_distance"] = g.boundary_distance;
  rep.data["r"] = r;

  const ConvexBody& sub = *f.sub_body;
  for (const Vec& s : closed_face_samples(sub, samples)) {
    Vec pulled = s / lambda;  // homothety centred at the anchor (s = 0)
    double d = hilbert_distance_chart(sub, Vec::Zero(f.dim), pulled);
    double margin = d - r;
    if (margin > rep.worst_margin) {
      rep.worst_margin = margin;
      rep.witnesses.clear();
      rep.witnesses.push_back(f.origin_chart + f.frame * s);
    }
  }
  rep.pass = rep.worst_margin <= kProbeTol;
  return rep;
}

ProbeReport check_scaled_ball_in_ball(const ConvexBody& body, const ClosurePoint& x, double r,
                                      double R, int samples) {
  double mu = ball_ratio(r, R);  // throws BadRadii unless 0 < r < R

  ProbeReport rep;
  rep.name = "scaled-ball-in-ball";
  rep.data["mu"] = mu;
  rep.data["r"] = r;
  rep.data["R"] = R;

  std::vector<ClosurePoint> big = closure_ball_sample(body, x, R, samples);
  for (const ClosurePoint& y : big) {
    Vec pulled = homothety(x.chart, 1.0 / mu, y.chart);
    ClosurePoint pcp;
    pcp.point = body.chart().from_chart(pulled);
    pcp.chart = pulled;
    pcp.interior = x.interior;
    pcp.face = x.face;
    ExtendedDistance d = x.interior
        ? ExtendedDistance{hilbert_distance_chart(body, x.chart, pulled)}
        : extended_distance(body, x, pcp);
    double margin = d.value - r;
    if (margin > rep.worst_margin) {
      rep.worst_margin = margin;
      rep.witnesses.clear();
      rep.witnesses.push_back(y.chart);
    }
  }
  rep.pass = rep.worst_margin <= kProbeTol;
  return rep;
}

ProbeReport semicontinuity_probe(const ConvexBody& body,
                                 const std::vector<SemicontinuitySequence>& sequences,
                                 double tolerance) {
  ProbeReport rep;
  rep.name = "lower-semicontinuity";
  for (const auto& seq : sequences) {
    if (seq.terms.empty()) continue;
    std::vector<double> vals;
    vals.reserve(seq.terms.size());
    for (const auto& [xn, yn] : seq.terms) {
      vals.push_back(extended_distance(body, xn, yn).value);
    }
    double d_limit = extended_distance(body, seq.limit.first, seq.limit.second).value;
    size_t tail = std::max<size_t>(3, vals.size() / 4);
    tail = std::min(tail, vals.size());
    double liminf = 1e300;
    for (size_t i = vals.size() - tail; i < vals.size(); ++i) liminf = std::min(liminf, vals[i]);
    if (!std::isfinite(d_limit)) continue;  // liminf >= infinity only for constant-infinite tails
    double margin = d_limit - liminf;  // positive margin = violation
    if (margin > rep.worst_margin) {
      rep.worst_margin = margin;
      rep.witnesses.clear();
      rep.witnesses.push_back(body.chart().to_chart(seq.limit.first));
    }
    rep.data[seq.name] = margin;
  }
  rep.pass = rep.worst_margin <= tolerance;
  return rep;
}

namespace {

ConvexBody unit_square() {
  Mat a(4, 2);
  Vec b(4);
  a << 1, 0, -1, 0, 0, 1, 0, -1;
  b << 1, 1, 1, 1;
  return ConvexBody::hpolytope(a, b, AffineChart::standard(2), Vec::Zero(2));
}

ProjPoint chart_point(const ConvexBody& body, std::initializer_list<double> coords) {
  Vec u(static_cast<int>(coords.size()));
  int i = 0;
  for (double c : coords) u[i++] = c;
  return body.chart().from_chart(u);
}

}  // namespace

std::vector<SemicontinuityCase> standard_semicontinuity_suite() {
  std::vector<SemicontinuityCase> cases;

  {
    SemicontinuityCase c{"square", unit_square(), {}};
    SemicontinuitySequence constant;
    constant.name = "constant-interior";
    for (int n = 1; n <= 16; ++n) {
      constant.terms.push_back({chart_point(c.body, {0.2, 0.1}), chart_point(c.body, {-0.3, 0.4})});
    }
    constant.limit = {chart_point(c.body, {0.2, 0.1}), chart_point(c.body, {-0.3, 0.4})};
    c.sequences.push_back(constant);

    SemicontinuitySequence edge;
    edge.name = "interior-to-edge";
    for (int n = 1; n <= 24; ++n) {
      double t = 1.0 - 1.0 / (n + 1.0);
      edge.terms.push_back({chart_point(c.body, {t, 0.0}), chart_point(c.body, {t, 0.4})});
    }
    edge.limit = {chart_point(c.body, {1.0, 0.0}), chart_point(c.body, {1.0, 0.4})};
    c.sequences.push_back(edge);

    SemicontinuitySequence corner;
    corner.name = "interior-to-distinct-faces";
    for (int n = 1; n <= 24; ++n) {
      double t = 1.0 - 1.0 / (n + 1.0);
      corner.terms.push_back({chart_point(c.body, {t, 0.0}), chart_point(c.body, {0.0, t})});
    }
    corner.limit = {chart_point(c.body, {1.0, 0.0}), chart_point(c.body, {0.0, 1.0})};
    c.sequences.push_back(corner);
    cases.push_back(std::move(c));
  }

  {
    ConvexBody disk = ConvexBody::ellipsoid(Vec::Zero(2), Mat::Identity(2, 2),
                                            AffineChart::standard(2));
    SemicontinuityCase c{"disk", disk, {}};
    SemicontinuitySequence bd;
    bd.name = "interior-pair-to-boundary-pair";
    for (int n = 1; n <= 24; ++n) {
      double t = 1.0 - 1.0 / (n + 1.0);
      bd.terms.push_back({chart_point(c.body, {t, 0.0}), chart_point(c.body, {0.0, t})});
    }
    bd.limit = {chart_point(c.body, {1.0, 0.0}), chart_point(c.body, {0.0, 1.0})};
    c.sequences.push_back(bd);
    cases.push_back(std::move(c));
  }

  {
    // A jump of f: the sequence runs along short faces, the limit face is
    // taller, so the limit distance drops below the sequence values.
    StepFunctionSpec spec;
    spec.breakpoints = {0.0};
    spec.values = {1.0};
    spec.point_values[0.0] = 2.0;
    ConvexBody of = build_omega_f(spec, 180);
    SemicontinuityCase c{"omega-f-jump", of, {}};
    const OmegaFInfo& info = of.omega_info();
    SemicontinuitySequence jump;
    jump.name = "vertical-faces-across-jump";
    for (size_t k = 1; k < info.grid_angles.size() && jump.terms.size() < 24; ++k) {
      double t = info.grid_angles[k];
      if (t > 1.0) break;
      Vec u1(3), u2(3);
      u1 << std::cos(t), std::sin(t), 0.2;
      u2 << std::cos(t), std::sin(t), 0.6;
      jump.terms.push_back({c.body.chart().from_chart(u1), c.body.chart().from_chart(u2)});
    }
    std::reverse(jump.terms.begin(), jump.terms.end());
    Vec l1(3), l2(3);
    l1 << 1.0, 0.0, 0.2;
    l2 << 1.0, 0.0, 0.6;
    jump.limit = {c.body.chart().from_chart(l1), c.body.chart().from_chart(l2)};
    c.sequences.push_back(jump);
    cases.push_back(std::move(c));
  }

  return cases;
}

std::vector<FactConfig> random_fact_configurations(std::uint64_t seed, int count) {
  Rng rng(seed);
  std::vector<FactConfig> out;
  out.reserve(count);
  while (static_cast<int>(out.size()) < count) {
    int which = static_cast<int>(out.size()) % 3;
    try {
      if (which == 0) {
        // random polygon, anchor on an edge interior
        std::vector<Vec> pts;
        int n = rng.uniform_int(5, 11);
        for (int i = 0; i < n; ++i) {
          Vec p(2);
          p << rng.normal(), rng.normal();
          pts.push_back(p);
        }
        ConvexBody body = ConvexBody::hull_body(pts, AffineChart::standard(2));
        const auto& ring = body.hull_vertices();
        int e = rng.uniform_int(0, static_cast<int>(ring.size()) - 1);
        double t = rng.uniform(0.2, 0.8);
        Vec u = (1.0 - t) * ring[e] + t * ring[(e + 1) % ring.size()];
        FactConfig cfg{"polygon-edge", body, body.chart().from_chart(u), 0.0, 0.0};
        cfg.r = rng.uniform(0.05, 1.5);
        cfg.R = cfg.r + rng.uniform(0.05, 1.5);
        out.push_back(std::move(cfg));
      } else if (which == 1) {
        // random 3-d hull, anchor inside a 2-d facet
        std::vector<Vec> pts;
        int n = rng.uniform_int(8, 14);
        for (int i = 0; i < n; ++i) {
          Vec p(3);
          p << rng.normal(), rng.normal(), rng.normal();
          pts.push_back(p);
        }
        HullResult h = convex_hull(pts);
        ConvexBody body = ConvexBody::hull_body(pts, AffineChart::standard(3));
        int f = rng.uniform_int(0, static_cast<int>(h.facet_points.size()) - 1);
        const auto& on = h.facet_points[f];
        if (on.size() < 3) continue;
        Vec u = Vec::Zero(3);
        double wsum = 0.0;
        for (int idx : on) {
          double w = 0.2 + rng.uniform();
          u += w * pts[idx];
          wsum += w;
        }
        u /= wsum;
        FactConfig cfg{"hull-facet", body, body.chart().from_chart(u), 0.0, 0.0};
        cfg.r = rng.uniform(0.05, 1.2);
        cfg.R = cfg.r + rng.uniform(0.05, 1.2);
        out.push_back(std::move(cfg));
      } else {
        // scaled box, anchor on an edge (a 1-face of a 3-d body)
        Vec half(3);
        half << rng.uniform(0.5, 2.0), rng.uniform(0.5, 2.0), rng.uniform(0.5, 2.0);
        Mat a(6, 3);
        Vec b(6);
        a << 1, 0, 0, -1, 0, 0, 0, 1, 0, 0, -1, 0, 0, 0, 1, 0, 0, -1;
        b << half[0], half[0], half[1], half[1], half[2], half[2];
        ConvexBody body = ConvexBody::hpolytope(a, b, AffineChart::standard(3), Vec::Zero(3));
        int axis = rng.uniform_int(0, 2);
        Vec u(3);
        for (int i = 0; i < 3; ++i) {
          u[i] = (i == axis) ? rng.uniform(-0.6, 0.6) * half[i]
                             : (rng.uniform() < 0.5 ? -half[i] : half[i]);
        }
        FactConfig cfg{"box-edge", body, body.chart().from_chart(u), 0.0, 0.0};
        cfg.r = rng.uniform(0.05, 1.5);
        cfg.R = cfg.r + rng.uniform(0.05, 1.5);
        out.push_back(std::move(cfg));
      }
    } catch (const Error&) {
      // degenerate random draw; try again
    }
  }
  return out;
}

}  // namespace hilbert
