#pragma once

#include <Eigen/Dense>
#include <random>
#include <stdexcept>
#include <string>

namespace stsl {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;
using Index = Eigen::Index;
using Rng = std::mt19937_64;

// Thrown when an operation is requested that the model/operator cannot
// provide (no analytic Hessian, no oracle conditional, ...).
class CapabilityError : public std::runtime_error {
 public:
  explicit CapabilityError(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when a latent goes non-finite mid-run; carries a diagnostic snapshot.
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

inline Vec normal_vector(Rng& rng, Index n, double stddev = 1.0) {
  std::normal_distribution<double> dist(0.0, stddev);
  Vec v(n);
  for (Index i = 0; i < n; ++i) v[i] = dist(rng);
  return v;
}

inline void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

}  // namespace stsl
