#pragma once

#include <vector>

#include "stsl/types.hpp"

namespace stsl {

enum class ScheduleFamily { LinearBeta, Cosine, ConstantAlpha };

// Discrete variance-preserving schedule. Noise index k runs 0..T with k=0
// clean data and k=T maximal noise; the reverse-loop variable t of the
// samplers maps to noise index T-t.
struct NoiseSchedule {
  int step_count = 0;               // T
  std::vector<double> alphas;       // alphas[k] for k in 1..T; alphas[0] = 1 placeholder
  std::vector<double> alpha_bars;   // alpha_bars[k] for k in 0..T; alpha_bars[0] = 1

  double alpha(int k) const { return alphas.at(static_cast<size_t>(k)); }
  double alpha_bar(int k) const { return alpha_bars.at(static_cast<size_t>(k)); }
};

struct ScheduleParams {
  double beta_min = 1e-4;       // linear-beta
  double beta_max = 0.005;      // linear-beta
  double alpha = 1.0;           // constant-alpha
  double cosine_offset = 0.008; // cosine
};

NoiseSchedule build_schedule(int step_count, ScheduleFamily family,
                             const ScheduleParams& params = {});

ScheduleFamily schedule_family_from_string(const std::string& name);
std::string to_string(ScheduleFamily family);

// Draws from N(sqrt(abar_k) x0, (1-abar_k) I).
Vec forward_noising(const NoiseSchedule& schedule, const Vec& x0, int k, Rng& rng);

}  // namespace stsl
