#pragma once

#include <Eigen/Dense>
#include <string>

#include "hilbert/errors.hpp"
#include "hilbert/tolerances.hpp"

namespace hilbert {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

/// A point of real projective space, stored as the canonical homogeneous
/// representative: Euclidean norm 1, first nonzero coordinate positive.
class ProjPoint {
 public:
  /// Placeholder point [1] so aggregates can default-construct; overwrite
  /// before use.
  ProjPoint() : v_(Vec::Ones(1)) {}
  explicit ProjPoint(Vec raw);

  const Vec& coords() const { return v_; }
  /// Dimension d of the projective space P(R^{d+1}) the point lives in.
  int ambient_dim() const { return static_cast<int>(v_.size()) - 1; }

  bool approx_equal(const ProjPoint& other, double eps = tol::point_eq) const;

 private:
  Vec v_;
};

/// Returns a copy of v scaled to norm 1 with the first nonzero entry
/// positive. Idempotent.
Vec canonicalize(const Vec& v);

/// An affine chart of P(V): the hyperplane {l = 1} for a linear functional l,
/// with a fixed orthonormal frame so chart coordinates live in R^d.
class AffineChart {
 public:
  explicit AffineChart(Vec covector);

  /// The default chart: l = last coordinate functional, frame = identity.
  static AffineChart standard(int dim);

  int dim() const { return static_cast<int>(basis_.cols()); }
  const Vec& covector() const { return covector_; }
  const Vec& origin() const { return origin_; }
  const Mat& basis() const { return basis_; }

  double functional(const Vec& x) const { return covector_.dot(x); }

  /// Chart coordinates of a projective point. Throws ChartViolation when the
  /// functional is nonpositive on the canonical representative.
  Vec to_chart(const ProjPoint& p) const;
  ProjPoint from_chart(const Vec& u) const;
  /// Unnormalized homogeneous lift of chart coordinates.
  Vec lift(const Vec& u) const { return origin_ + basis_ * u; }
  /// Homogeneous direction vector (l = 0) of a chart direction.
  Vec direction(const Vec& w) const { return basis_ * w; }

 private:
  Vec covector_;  // unit norm
  Vec origin_;    // point with l(origin) = 1
  Mat basis_;     // (d+1) x d, orthonormal columns spanning ker l
};

/// An element of PGL(V): a matrix normalized to max-abs entry 1 with the
/// first nonzero entry positive, plus an optional word label.
class ProjTransform {
 public:
  explicit ProjTransform(Mat m, std::string label = {});

  static ProjTransform identity(int ambient_dim);

  const Mat& matrix() const { return m_; }
  const std::string& label() const { return label_; }
  int ambient_dim() const { return static_cast<int>(m_.rows()) - 1; }

  double det() const { return m_.determinant(); }
  ProjTransform inverse() const;
  ProjTransform operator*(const ProjTransform& rhs) const;
  ProjPoint apply(const ProjPoint& p) const;

  bool approx_equal(const ProjTransform& other, double eps = tol::point_eq) const;

 private:
  Mat m_;
  std::string label_;
};

}  // namespace hilbert
