#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "stsl/covariance.hpp"
#include "stsl/schedule.hpp"
#include "stsl/types.hpp"

namespace stsl {

struct ScoreModelCaps {
  bool analytic_hessian = false;
  bool analytic_log_marginal = false;
  bool oracle_conditional = false;
};

// Provider of the diffused-marginal score grad log p_k(z). Oracle
// implementations expose analytic Hessians and log-marginals; anything else
// can be adapted through FdHessianAdapter.
class ScoreModel {
 public:
  virtual ~ScoreModel() = default;

  virtual Index dim() const = 0;
  virtual ScoreModelCaps caps() const = 0;
  virtual Vec score(const Vec& z, int k) const = 0;

  virtual double log_marginal(const Vec& z, int k) const;
  virtual Mat hessian(const Vec& z, int k) const;
  virtual Vec hvp(const Vec& z, int k, const Vec& v) const;
  virtual double hessian_trace(const Vec& z, int k) const;
};

// Per-component conditional of X0 given Z_k = z for oracle priors. A plain
// Gaussian is the one-component case.
struct OraclePosterior {
  std::vector<double> responsibilities;
  std::vector<Vec> means;
  std::vector<Covariance> covs;
};

class OracleModel : public ScoreModel {
 public:
  virtual OraclePosterior posterior(const Vec& z, int k) const = 0;
  virtual Vec sample_prior(Rng& rng) const = 0;
};

// Central finite differences on unit-scaled data; step balances truncation
// against double-precision rounding.
inline constexpr double kFdStep = 1e-5;

Vec fd_score(const ScoreModel& model, const Vec& z, int k, double step = kFdStep);
Mat fd_hessian(const ScoreModel& model, const Vec& z, int k, double step = kFdStep);
Vec fd_hvp(const ScoreModel& model, const Vec& z, int k, const Vec& v, double step = kFdStep);

// Wraps a score-only model and answers Hessian queries by finite differences
// of the score. Opting in is explicit, per the capability contract.
class FdHessianAdapter : public OracleModel {
 public:
  explicit FdHessianAdapter(const ScoreModel& inner, double step = kFdStep)
      : inner_(inner), step_(step) {}

  Index dim() const override { return inner_.dim(); }
  ScoreModelCaps caps() const override;
  Vec score(const Vec& z, int k) const override { return inner_.score(z, k); }
  double log_marginal(const Vec& z, int k) const override { return inner_.log_marginal(z, k); }
  Mat hessian(const Vec& z, int k) const override { return fd_hessian(inner_, z, k, step_); }
  Vec hvp(const Vec& z, int k, const Vec& v) const override { return fd_hvp(inner_, z, k, v, step_); }
  double hessian_trace(const Vec& z, int k) const override;
  OraclePosterior posterior(const Vec& z, int k) const override;
  Vec sample_prior(Rng& rng) const override;

 private:
  const ScoreModel& inner_;
  double step_;
};

// Which part of a sampler consumed a score evaluation.
enum class NfeCategory { Guidance, Probe, Combine, ForwardEncode, Other };

struct NfeCounts {
  uint64_t guidance = 0;
  uint64_t probe = 0;
  uint64_t combine = 0;
  uint64_t forward_encode = 0;
  uint64_t other = 0;

  uint64_t total() const { return guidance + probe + combine + forward_encode + other; }
};

// Instrumented pass-through; the sampler selects the active category.
class CountingScoreModel : public ScoreModel {
 public:
  explicit CountingScoreModel(const ScoreModel& inner) : inner_(inner) {}

  Index dim() const override { return inner_.dim(); }
  ScoreModelCaps caps() const override { return inner_.caps(); }
  Vec score(const Vec& z, int k) const override {
    bump();
    return inner_.score(z, k);
  }
  double log_marginal(const Vec& z, int k) const override { return inner_.log_marginal(z, k); }
  Mat hessian(const Vec& z, int k) const override { return inner_.hessian(z, k); }
  Vec hvp(const Vec& z, int k, const Vec& v) const override { return inner_.hvp(z, k, v); }
  double hessian_trace(const Vec& z, int k) const override { return inner_.hessian_trace(z, k); }

  void set_category(NfeCategory c) { category_ = c; }
  const NfeCounts& counts() const { return counts_; }

 private:
  void bump() const {
    switch (category_) {
      case NfeCategory::Guidance: ++counts_.guidance; break;
      case NfeCategory::Probe: ++counts_.probe; break;
      case NfeCategory::Combine: ++counts_.combine; break;
      case NfeCategory::ForwardEncode: ++counts_.forward_encode; break;
      case NfeCategory::Other: ++counts_.other; break;
    }
  }

  const ScoreModel& inner_;
  NfeCategory category_ = NfeCategory::Other;
  mutable NfeCounts counts_;
};

}  // namespace stsl
