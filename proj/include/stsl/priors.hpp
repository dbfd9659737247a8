#pragma once

#include <vector>

#include "stsl/score_model.hpp"

namespace stsl {

struct GaussianPrior {
  Vec mean;
  Covariance cov;
};

struct GaussianMixturePrior {
  std::vector<double> weights;  // simplex
  std::vector<Vec> means;
  std::vector<Covariance> covs;

  Index dim() const { return means.empty() ? 0 : means.front().size(); }
  void validate() const;
};

// Pushes the prior through the transition kernel: means scale by sqrt(abar_k),
// covariances become abar_k*Sigma + (1-abar_k)*I.
GaussianPrior marginal_at(const GaussianPrior& prior, const NoiseSchedule& schedule, int k);
GaussianMixturePrior marginal_at(const GaussianMixturePrior& prior,
                                 const NoiseSchedule& schedule, int k);

// Oracle score model for a single Gaussian prior; everything is closed form.
class GaussianScoreModel : public OracleModel {
 public:
  GaussianScoreModel(GaussianPrior prior, const NoiseSchedule& schedule);

  Index dim() const override { return prior_.mean.size(); }
  ScoreModelCaps caps() const override { return {true, true, true}; }
  Vec score(const Vec& z, int k) const override;
  double log_marginal(const Vec& z, int k) const override;
  Mat hessian(const Vec& z, int k) const override;
  Vec hvp(const Vec& z, int k, const Vec& v) const override;
  double hessian_trace(const Vec& z, int k) const override;
  OraclePosterior posterior(const Vec& z, int k) const override;
  Vec sample_prior(Rng& rng) const override;

  const GaussianPrior& prior() const { return prior_; }
  const NoiseSchedule& schedule() const { return schedule_; }

 private:
  const Covariance& marginal_cov(int k) const;

  GaussianPrior prior_;
  NoiseSchedule schedule_;
  std::vector<Covariance> marginal_covs_;  // per k, factored once
};

// Oracle score model for a Gaussian mixture prior.
class MixtureScoreModel : public OracleModel {
 public:
  MixtureScoreModel(GaussianMixturePrior prior, const NoiseSchedule& schedule);

  Index dim() const override { return prior_.dim(); }
  ScoreModelCaps caps() const override { return {true, true, true}; }
  Vec score(const Vec& z, int k) const override;
  double log_marginal(const Vec& z, int k) const override;
  Mat hessian(const Vec& z, int k) const override;
  Vec hvp(const Vec& z, int k, const Vec& v) const override;
  double hessian_trace(const Vec& z, int k) const override;
  OraclePosterior posterior(const Vec& z, int k) const override;
  Vec sample_prior(Rng& rng) const override;

  // Posterior component weights of the diffused marginal at z.
  std::vector<double> responsibilities(const Vec& z, int k) const;

  const GaussianMixturePrior& prior() const { return prior_; }
  const NoiseSchedule& schedule() const { return schedule_; }

 private:
  struct Level {
    std::vector<Vec> means;
    std::vector<Covariance> covs;
    std::vector<double> log_norm;  // -0.5 log det(2 pi C_i)
  };
  const Level& level(int k) const;

  GaussianMixturePrior prior_;
  NoiseSchedule schedule_;
  std::vector<Level> levels_;
};

// Six fixed smooth patterns over a side x side grid, used as mixture means
// for the bundled image-scale experiments.
std::vector<Vec> pattern_means(int side, double scale);

GaussianMixturePrior pattern_gmm_prior(int side, double component_sigma, double scale);

}  // namespace stsl
