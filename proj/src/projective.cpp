#include "hilbert/projective.hpp"

#include <cmath>

namespace hilbert {

namespace {
constexpr double kZeroEntry = 1e-14;
}

Vec canonicalize(const Vec& v) {
  double n = v.norm();
  if (n <= 0.0 || !std::isfinite(n)) {
    fail(ErrorCode::BadSpec, "projective point needs a nonzero finite vector");
  }
  Vec out = v / n;
  for (int i = 0; i < out.size(); ++i) {
    if (std::abs(out[i]) > kZeroEntry) {
      if (out[i] < 0.0) out = -out;
      break;
    }
  }
  return out;
}

ProjPoint::ProjPoint(Vec raw) : v_(canonicalize(raw)) {}

bool ProjPoint::approx_equal(const ProjPoint& other, double eps) const {
  if (other.v_.size() != v_.size()) return false;
  return (v_ - other.v_).norm() <= eps;
}

AffineChart::AffineChart(Vec covector) {
  double n = covector.norm();
  if (n <= 0.0 || !std::isfinite(n)) {
    fail(ErrorCode::BadSpec, "chart covector must be nonzero");
  }
  covector_ = covector / n;
  const int dim1 = static_cast<int>(covector_.size());

  // Keep the natural frame when the covector is a coordinate axis, so the
  // default chart reads off plain coordinates.
  int axis = -1;
  for (int i = 0; i < dim1; ++i) {
    if (std::abs(std::abs(covector_[i]) - 1.0) < 1e-15) axis = i;
  }
  if (axis >= 0 && covector_.cwiseAbs().sum() < 1.0 + 1e-15) {
    origin_ = Vec::Zero(dim1);
    origin_[axis] = covector_[axis] > 0 ? 1.0 : -1.0;
    basis_ = Mat::Zero(dim1, dim1 - 1);
    int c = 0;
    for (int i = 0; i < dim1; ++i) {
      if (i == axis) continue;
      basis_(i, c++) = 1.0;
    }
  } else {
    origin_ = covector_;  // l(origin) = 1 since l is unit norm
    Eigen::HouseholderQR<Mat> qr(covector_);
    Mat q = qr.householderQ();
    basis_ = q.rightCols(dim1 - 1);
  }
}

AffineChart AffineChart::standard(int dim) {
  Vec l = Vec::Zero(dim + 1);
  l[dim] = 1.0;
  return AffineChart(l);
}

Vec AffineChart::to_chart(const ProjPoint& p) const {
  // The canonical representative may carry either sign; dividing by the
  // functional lands on the chart plane whenever the line is not at infinity.
  double f = functional(p.coords());
  if (std::abs(f) <= 1e-14) {
    fail(ErrorCode::ChartViolation, "point lies on the chart's hyperplane at infinity");
  }
  Vec affine = p.coords() / f;
  return basis_.transpose() * (affine - origin_);
}

ProjPoint AffineChart::from_chart(const Vec& u) const {
  return ProjPoint(lift(u));
}

namespace {

Mat normalize_matrix(const Mat& m) {
  double scale = m.cwiseAbs().maxCoeff();
  if (scale <= 0.0 || !std::isfinite(scale)) {
    fail(ErrorCode::SingularTransform, "zero or non-finite matrix");
  }
  Mat out = m / scale;
  for (int i = 0; i < out.rows(); ++i) {
    for (int j = 0; j < out.cols(); ++j) {
      double e = out(i, j);
      if (std::abs(e) > kZeroEntry) {
        if (e < 0.0) out = -out;
        return out;
      }
    }
  }
  return out;
}

}  // namespace

ProjTransform::ProjTransform(Mat m, std::string label)
    : m_(normalize_matrix(m)), label_(std::move(label)) {
  if (m_.rows() != m_.cols() || m_.rows() < 2) {
    fail(ErrorCode::BadSpec, "transform matrix must be square, size >= 2");
  }
  if (std::abs(m_.determinant()) <= tol::det_floor) {
    fail(ErrorCode::SingularTransform, "normalized determinant below floor");
  }
}

ProjTransform ProjTransform::identity(int ambient_dim) {
  return ProjTransform(Mat::Identity(ambient_dim + 1, ambient_dim + 1));
}

ProjTransform ProjTransform::inverse() const {
  std::string lbl = label_.empty() ? std::string() : label_ + "^-1";
  return ProjTransform(m_.inverse(), std::move(lbl));
}

ProjTransform ProjTransform::operator*(const ProjTransform& rhs) const {
  std::string lbl;
  if (!label_.empty() && !rhs.label_.empty()) lbl = label_ + "." + rhs.label_;
  return ProjTransform(m_ * rhs.m_, std::move(lbl));
}

ProjPoint ProjTransform::apply(const ProjPoint& p) const {
  return ProjPoint(m_ * p.coords());
}

bool ProjTransform::approx_equal(const ProjTransform& other, double eps) const {
  if (other.m_.rows() != m_.rows()) return false;
  return (m_ - other.m_).cwiseAbs().maxCoeff() <= eps;
}

}  // namespace hilbert
