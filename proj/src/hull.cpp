#include "hilbert/hull.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <unordered_map>

#include "hilbert/errors.hpp"
#include "hilbert/sampling.hpp"

namespace hilbert {

namespace {

double cloud_scale(const std::vector<Vec>& pts) {
  double s = 0.0;
  for (const auto& p : pts) s = std::max(s, p.cwiseAbs().maxCoeff());
  return std::max(s, 1.0);
}

std::vector<int> dedup_points(const std::vector<Vec>& pts, double eps) {
  std::vector<int> keep;
  for (int i = 0; i < static_cast<int>(pts.size()); ++i) {
    bool dup = false;
    for (int j : keep) {
      if ((pts[i] - pts[j]).norm() <= eps) {
        dup = true;
        break;
      }
    }
    if (!dup) keep.push_back(i);
  }
  return keep;
}

HullResult hull_1d(const std::vector<Vec>& pts) {
  int lo = 0, hi = 0;
  for (int i = 1; i < static_cast<int>(pts.size()); ++i) {
    if (pts[i][0] < pts[lo][0]) lo = i;
    if (pts[i][0] > pts[hi][0]) hi = i;
  }
  if (pts[hi][0] - pts[lo][0] <= 0.0) {
    fail(ErrorCode::BadSpec, "hull input does not span dimension 1");
  }
  HullResult r;
  r.A = Mat(2, 1);
  r.b = Vec(2);
  r.A << 1.0, -1.0;
  r.b << pts[hi][0], -pts[lo][0];
  r.vertices = {lo, hi};
  r.facet_points = {{hi}, {lo}};
  return r;
}

double cross2(const Vec& o, const Vec& a, const Vec& b) {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

HullResult hull_2d(const std::vector<Vec>& pts) {
  const double scale = cloud_scale(pts);
  std::vector<int> idx = dedup_points(pts, 1e-12 * scale);
  std::sort(idx.begin(), idx.end(), [&](int i, int j) {
    if (pts[i][0] != pts[j][0]) return pts[i][0] < pts[j][0];
    return pts[i][1] < pts[j][1];
  });
  const int n = static_cast<int>(idx.size());
  if (n < 3) fail(ErrorCode::BadSpec, "hull input does not span dimension 2");

  // Monotone chain; strictly convex turns so collinear points are dropped
  // from the vertex ring.
  const double turn_eps = 1e-12 * scale * scale;
  std::vector<int> ring(2 * n);
  int k = 0;
  for (int ii = 0; ii < n; ++ii) {
    int i = idx[ii];
    while (k >= 2 && cross2(pts[ring[k - 2]], pts[ring[k - 1]], pts[i]) <= turn_eps) --k;
    ring[k++] = i;
  }
  int lower = k + 1;
  for (int ii = n - 2; ii >= 0; --ii) {
    int i = idx[ii];
    while (k >= lower && cross2(pts[ring[k - 2]], pts[ring[k - 1]], pts[i]) <= turn_eps) --k;
    ring[k++] = i;
  }
  ring.resize(k - 1);
  if (static_cast<int>(ring.size()) < 3) {
    fail(ErrorCode::BadSpec, "hull input does not span dimension 2");
  }

  const int m = static_cast<int>(ring.size());
  HullResult r;
  r.vertices = ring;
  r.A = Mat(m, 2);
  r.b = Vec(m);
  r.facet_points.resize(m);
  for (int e = 0; e < m; ++e) {
    const Vec& p = pts[ring[e]];
    const Vec& q = pts[ring[(e + 1) % m]];
    Eigen::Vector2d t(q[0] - p[0], q[1] - p[1]);
    Eigen::Vector2d nrm(t[1], -t[0]);  // outward for a CCW ring
    nrm.normalize();
    r.A.row(e) = nrm.transpose();
    r.b[e] = nrm.dot(Eigen::Vector2d(p[0], p[1]));
  }
  // Offsets pushed to the true maximum so every input point is inside.
  for (int e = 0; e < m; ++e) {
    double mx = -1e300;
    for (const auto& p : pts) mx = std::max(mx, r.A.row(e).dot(p));
    r.b[e] = mx;
    for (int i = 0; i < static_cast<int>(pts.size()); ++i) {
      if (r.b[e] - r.A.row(e).dot(pts[i]) <= 1e-9 * scale) r.facet_points[e].push_back(i);
    }
  }
  return r;
}

struct Tri {
  int a, b, c;
  Eigen::Vector3d n;  // outward unit normal (joggled coordinates)
  double off;
  bool alive = true;
};

std::uint64_t edge_key(int u, int v) {
  if (u > v) std::swap(u, v);
  return (static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint64_t>(v);
}

HullResult hull_3d(const std::vector<Vec>& pts) {
  const double scale = cloud_scale(pts);
  std::vector<int> keep = dedup_points(pts, 1e-12 * scale);
  const int n = static_cast<int>(keep.size());
  if (n < 4) fail(ErrorCode::BadSpec, "hull input does not span dimension 3");

  // Deterministic joggle clears coplanarity; facet planes are refit from the
  // original coordinates afterwards.
  const double jog = 1e-8 * scale;
  std::vector<Eigen::Vector3d> P(n);
  for (int i = 0; i < n; ++i) {
    Eigen::Vector3d p(pts[keep[i]][0], pts[keep[i]][1], pts[keep[i]][2]);
    P[i] = p + jog * Eigen::Vector3d(halton_direction(i, 3));
  }

  // Initial tetrahedron: spread points greedily.
  int i0 = 0, i1 = -1, i2 = -1, i3 = -1;
  double best = -1.0;
  for (int i = 1; i < n; ++i) {
    double d = (P[i] - P[i0]).norm();
    if (d > best) best = d, i1 = i;
  }
  best = -1.0;
  for (int i = 0; i < n; ++i) {
    if (i == i0 || i == i1) continue;
    double d = (P[i1] - P[i0]).cross(P[i] - P[i0]).norm();
    if (d > best) best = d, i2 = i;
  }
  Eigen::Vector3d nrm0 = (P[i1] - P[i0]).cross(P[i2] - P[i0]);
  best = -1.0;
  for (int i = 0; i < n; ++i) {
    if (i == i0 || i == i1 || i == i2) continue;
    double d = std::abs(nrm0.dot(P[i] - P[i0]));
    if (d > best) best = d, i3 = i;
  }
  if (i1 < 0 || i2 < 0 || i3 < 0 || best <= 1e-10 * scale) {
    fail(ErrorCode::BadSpec, "hull input does not span dimension 3");
  }
  Eigen::Vector3d inside = 0.25 * (P[i0] + P[i1] + P[i2] + P[i3]);

  std::vector<Tri> tris;
  auto push_tri = [&](int a, int b, int c) {
    Tri t{a, b, c, {}, 0.0, true};
    t.n = (P[b] - P[a]).cross(P[c] - P[a]);
    double nn = t.n.norm();
    t.n /= nn;
    t.off = t.n.dot(P[a]);
    if (t.n.dot(inside) > t.off) {  // flip outward
      std::swap(t.b, t.c);
      t.n = -t.n;
      t.off = -t.off;
    }
    tris.push_back(t);
  };
  push_tri(i0, i1, i2);
  push_tri(i0, i1, i3);
  push_tri(i0, i2, i3);
  push_tri(i1, i2, i3);

  const double eps_vis = 1e-12 * scale;
  for (int i = 0; i < n; ++i) {
    if (i == i0 || i == i1 || i == i2 || i == i3) continue;
    std::vector<int> visible;
    for (int t = 0; t < static_cast<int>(tris.size()); ++t) {
      if (tris[t].alive && tris[t].n.dot(P[i]) > tris[t].off + eps_vis) visible.push_back(t);
    }
    if (visible.empty()) continue;

    // Horizon edges appear in exactly one visible facet.
    std::unordered_map<std::uint64_t, std::pair<int, int>> edge_count;
    for (int t : visible) {
      const Tri& tr = tris[t];
      const int e[3][2] = {{tr.a, tr.b}, {tr.b, tr.c}, {tr.c, tr.a}};
      for (auto& uv : e) {
        auto key = edge_key(uv[0], uv[1]);
        auto it = edge_count.find(key);
        if (it == edge_count.end()) {
          edge_count.emplace(key, std::make_pair(uv[0], uv[1]));
        } else {
          edge_count.erase(it);  // interior edge of the visible region
        }
      }
    }
    for (int t : visible) tris[t].alive = false;
    for (const auto& [key, uv] : edge_count) {
      (void)key;
      push_tri(uv.first, uv.second, i);
    }
  }

  // Refit planes from original coordinates and merge coplanar triangles.
  struct Plane {
    Eigen::Vector3d n;
    double off;
    std::vector<int> tris;
  };
  std::vector<Plane> planes;
  auto orig = [&](int i) {
    return Eigen::Vector3d(pts[keep[i]][0], pts[keep[i]][1], pts[keep[i]][2]);
  };
  std::vector<char> is_vertex(n, 0);
  for (int t = 0; t < static_cast<int>(tris.size()); ++t) {
    const Tri& tr = tris[t];
    if (!tr.alive) continue;
    is_vertex[tr.a] = is_vertex[tr.b] = is_vertex[tr.c] = 1;
    Eigen::Vector3d a = orig(tr.a), b = orig(tr.b), c = orig(tr.c);
    Eigen::Vector3d nr = (b - a).cross(c - a);
    if (nr.norm() <= 1e-13 * scale * scale) continue;  // exactly collinear triple
    nr.normalize();
    if (nr.dot(tr.n) < 0) nr = -nr;
    double off = nr.dot(a);
    bool merged = false;
    for (auto& pl : planes) {
      if ((pl.n - nr).norm() <= 1e-7 && std::abs(pl.off - off) <= 1e-7 * scale) {
        pl.tris.push_back(t);
        merged = true;
        break;
      }
    }
    if (!merged) planes.push_back(Plane{nr, off, {t}});
  }

  HullResult r;
  const int m = static_cast<int>(planes.size());
  r.A = Mat(m, 3);
  r.b = Vec(m);
  r.facet_points.resize(m);
  for (int f = 0; f < m; ++f) {
    r.A.row(f) = planes[f].n.transpose();
    double mx = -1e300;
    for (const auto& p : pts) mx = std::max(mx, r.A.row(f).dot(p));
    r.b[f] = mx;
    for (int i = 0; i < static_cast<int>(pts.size()); ++i) {
      if (r.b[f] - r.A.row(f).dot(pts[i]) <= 1e-9 * scale) r.facet_points[f].push_back(i);
    }
  }
  for (int i = 0; i < n; ++i) {
    if (is_vertex[i]) r.vertices.push_back(keep[i]);
  }
  std::sort(r.vertices.begin(), r.vertices.end());
  return r;
}

}  // namespace

HullResult convex_hull(const std::vector<Vec>& points) {
  if (points.empty()) fail(ErrorCode::BadSpec, "hull of an empty cloud");
  const int d = static_cast<int>(points[0].size());
  for (const auto& p : points) {
    if (static_cast<int>(p.size()) != d) fail(ErrorCode::BadSpec, "mixed point dimensions");
  }
  switch (d) {
    case 1: return hull_1d(points);
    case 2: return hull_2d(points);
    case 3: return hull_3d(points);
    default: fail(ErrorCode::BadSpec, "convex_hull supports dimensions 1-3");
  }
}

double hausdorff_distance(const std::vector<Vec>& a, const std::vector<Vec>& b) {
  if (a.empty() || b.empty()) fail(ErrorCode::BadSpec, "hausdorff of an empty cloud");
  double h = 0.0;
  auto one_sided = [](const std::vector<Vec>& from, const std::vector<Vec>& to) {
    double worst = 0.0;
    for (const auto& p : from) {
      double best = 1e300;
      for (const auto& q : to) best = std::min(best, (p - q).norm());
      worst = std::max(worst, best);
    }
    return worst;
  };
  h = std::max(one_sided(a, b), one_sided(b, a));
  return h;
}

}  // namespace hilbert
