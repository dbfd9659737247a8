#pragma once

#include <memory>

#include "stsl/types.hpp"

namespace stsl {

// SPD covariance in one of three storage families. Scalar and diagonal keep
// every operation O(d) so image-scale priors stay cheap; dense factors once.
class Covariance {
 public:
  enum class Kind { Scalar, Diagonal, Dense };

  static Covariance scalar(Index dim, double value);
  static Covariance diagonal(Vec diag);
  static Covariance dense(Mat m);  // rejects asymmetric or non-SPD input

  Kind kind() const { return kind_; }
  Index dim() const { return dim_; }

  Vec apply(const Vec& v) const;
  Vec solve(const Vec& v) const;
  double quad_form_inv(const Vec& r) const;  // r^T C^-1 r
  double log_det() const;
  double inverse_trace() const;
  double trace() const;

  // a*C + b*I, preserving the storage family.
  Covariance affine(double a, double b) const;

  Mat dense_matrix() const;
  Mat inverse_dense() const;

  // C^{1/2} u with u ~ N(0, I).
  Vec sample(Rng& rng) const;

  double max_eigenvalue() const;

 private:
  Covariance() = default;

  Kind kind_ = Kind::Scalar;
  Index dim_ = 0;
  double scalar_ = 1.0;
  Vec diag_;
  Mat dense_;
  std::shared_ptr<Eigen::LLT<Mat>> llt_;
};

}  // namespace stsl
