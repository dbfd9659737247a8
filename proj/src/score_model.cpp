#include "stsl/score_model.hpp"

namespace stsl {

double ScoreModel::log_marginal(const Vec&, int) const {
  throw CapabilityError("score model has no analytic log-marginal");
}

Mat ScoreModel::hessian(const Vec&, int) const {
  throw CapabilityError("score model has no analytic Hessian");
}

Vec ScoreModel::hvp(const Vec& z, int k, const Vec& v) const {
  return hessian(z, k) * v;
}

double ScoreModel::hessian_trace(const Vec& z, int k) const {
  return hessian(z, k).trace();
}

Vec fd_score(const ScoreModel& model, const Vec& z, int k, double step) {
  Vec g(z.size());
  Vec zp = z;
  for (Index i = 0; i < z.size(); ++i) {
    zp[i] = z[i] + step;
    const double up = model.log_marginal(zp, k);
    zp[i] = z[i] - step;
    const double dn = model.log_marginal(zp, k);
    zp[i] = z[i];
    g[i] = (up - dn) / (2.0 * step);
  }
  return g;
}

Mat fd_hessian(const ScoreModel& model, const Vec& z, int k, double step) {
  const Index d = z.size();
  Mat h(d, d);
  Vec zp = z;
  for (Index i = 0; i < d; ++i) {
    zp[i] = z[i] + step;
    const Vec up = model.score(zp, k);
    zp[i] = z[i] - step;
    const Vec dn = model.score(zp, k);
    zp[i] = z[i];
    h.col(i) = (up - dn) / (2.0 * step);
  }
  return 0.5 * (h + h.transpose());
}

Vec fd_hvp(const ScoreModel& model, const Vec& z, int k, const Vec& v, double step) {
  const double n = v.norm();
  if (n == 0.0) return Vec::Zero(z.size());
  const Vec dir = v / n;
  return n / (2.0 * step) * (model.score(z + step * dir, k) - model.score(z - step * dir, k));
}

ScoreModelCaps FdHessianAdapter::caps() const {
  ScoreModelCaps c = inner_.caps();
  c.analytic_hessian = true;  // served by finite differences
  return c;
}

double FdHessianAdapter::hessian_trace(const Vec& z, int k) const {
  double acc = 0.0;
  Vec zp = z;
  for (Index i = 0; i < z.size(); ++i) {
    zp[i] = z[i] + step_;
    const double up = inner_.score(zp, k)[i];
    zp[i] = z[i] - step_;
    const double dn = inner_.score(zp, k)[i];
    zp[i] = z[i];
    acc += (up - dn) / (2.0 * step_);
  }
  return acc;
}

OraclePosterior FdHessianAdapter::posterior(const Vec& z, int k) const {
  if (const auto* oracle = dynamic_cast<const OracleModel*>(&inner_)) {
    return oracle->posterior(z, k);
  }
  throw CapabilityError("wrapped model has no oracle conditional");
}

Vec FdHessianAdapter::sample_prior(Rng& rng) const {
  if (const auto* oracle = dynamic_cast<const OracleModel*>(&inner_)) {
    return oracle->sample_prior(rng);
  }
  throw CapabilityError("wrapped model has no prior sampler");
}

}  // namespace stsl
