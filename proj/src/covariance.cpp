#include "stsl/covariance.hpp"

#include <cmath>

namespace stsl {

Covariance Covariance::scalar(Index dim, double value) {
  require(dim >= 1, "Covariance::scalar: dim must be positive");
  require(value > 0.0, "Covariance::scalar: value must be positive");
  Covariance c;
  c.kind_ = Kind::Scalar;
  c.dim_ = dim;
  c.scalar_ = value;
  return c;
}

Covariance Covariance::diagonal(Vec diag) {
  require(diag.size() >= 1, "Covariance::diagonal: empty diagonal");
  require((diag.array() > 0.0).all(), "Covariance::diagonal: entries must be positive");
  Covariance c;
  c.kind_ = Kind::Diagonal;
  c.dim_ = diag.size();
  c.diag_ = std::move(diag);
  return c;
}

Covariance Covariance::dense(Mat m) {
  require(m.rows() == m.cols() && m.rows() >= 1, "Covariance::dense: not square");
  require((m - m.transpose()).cwiseAbs().maxCoeff() <= 1e-12 * std::max(1.0, m.cwiseAbs().maxCoeff()),
          "Covariance::dense: matrix not symmetric within 1e-12");
  Covariance c;
  c.kind_ = Kind::Dense;
  c.dim_ = m.rows();
  c.dense_ = 0.5 * (m + m.transpose());
  c.llt_ = std::make_shared<Eigen::LLT<Mat>>(c.dense_);
  require(c.llt_->info() == Eigen::Success, "Covariance::dense: matrix not positive definite");
  return c;
}

Vec Covariance::apply(const Vec& v) const {
  switch (kind_) {
    case Kind::Scalar: return scalar_ * v;
    case Kind::Diagonal: return diag_.cwiseProduct(v);
    case Kind::Dense: return dense_ * v;
  }
  return v;
}

Vec Covariance::solve(const Vec& v) const {
  switch (kind_) {
    case Kind::Scalar: return v / scalar_;
    case Kind::Diagonal: return v.cwiseQuotient(diag_);
    case Kind::Dense: return llt_->solve(v);
  }
  return v;
}

double Covariance::quad_form_inv(const Vec& r) const {
  return r.dot(solve(r));
}

double Covariance::log_det() const {
  switch (kind_) {
    case Kind::Scalar: return static_cast<double>(dim_) * std::log(scalar_);
    case Kind::Diagonal: return diag_.array().log().sum();
    case Kind::Dense: {
      double acc = 0.0;
      const Mat& l = llt_->matrixLLT();
      for (Index i = 0; i < dim_; ++i) acc += std::log(l(i, i));
      return 2.0 * acc;
    }
  }
  return 0.0;
}

double Covariance::inverse_trace() const {
  switch (kind_) {
    case Kind::Scalar: return static_cast<double>(dim_) / scalar_;
    case Kind::Diagonal: return diag_.cwiseInverse().sum();
    case Kind::Dense: return llt_->solve(Mat::Identity(dim_, dim_)).trace();
  }
  return 0.0;
}

double Covariance::trace() const {
  switch (kind_) {
    case Kind::Scalar: return static_cast<double>(dim_) * scalar_;
    case Kind::Diagonal: return diag_.sum();
    case Kind::Dense: return dense_.trace();
  }
  return 0.0;
}

Covariance Covariance::affine(double a, double b) const {
  require(a >= 0.0 && b >= 0.0 && a + b > 0.0, "Covariance::affine: needs nonnegative a,b, not both 0");
  switch (kind_) {
    case Kind::Scalar: return Covariance::scalar(dim_, a * scalar_ + b);
    case Kind::Diagonal: return Covariance::diagonal(a * diag_ + Vec::Constant(dim_, b));
    case Kind::Dense: return Covariance::dense(a * dense_ + b * Mat::Identity(dim_, dim_));
  }
  return *this;
}

Mat Covariance::dense_matrix() const {
  switch (kind_) {
    case Kind::Scalar: return scalar_ * Mat::Identity(dim_, dim_);
    case Kind::Diagonal: return diag_.asDiagonal();
    case Kind::Dense: return dense_;
  }
  return Mat();
}

Mat Covariance::inverse_dense() const {
  switch (kind_) {
    case Kind::Scalar: return (1.0 / scalar_) * Mat::Identity(dim_, dim_);
    case Kind::Diagonal: return Vec(diag_.cwiseInverse()).asDiagonal();
    case Kind::Dense: return llt_->solve(Mat::Identity(dim_, dim_));
  }
  return Mat();
}

Vec Covariance::sample(Rng& rng) const {
  Vec u = normal_vector(rng, dim_);
  switch (kind_) {
    case Kind::Scalar: return std::sqrt(scalar_) * u;
    case Kind::Diagonal: return diag_.cwiseSqrt().cwiseProduct(u);
    case Kind::Dense: return llt_->matrixL() * u;
  }
  return u;
}

double Covariance::max_eigenvalue() const {
  switch (kind_) {
    case Kind::Scalar: return scalar_;
    case Kind::Diagonal: return diag_.maxCoeff();
    case Kind::Dense: {
      Eigen::SelfAdjointEigenSolver<Mat> es(dense_, Eigen::EigenvaluesOnly);
      return es.eigenvalues().maxCoeff();
    }
  }
  return 0.0;
}

}  // namespace stsl
