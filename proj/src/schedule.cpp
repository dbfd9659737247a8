#include "stsl/schedule.hpp"

#include <cmath>

namespace stsl {

namespace {

double cosine_abar(double s, double offset) {
  const double num = std::cos((s + offset) / (1.0 + offset) * M_PI / 2.0);
  return num * num;
}

}  // namespace

NoiseSchedule build_schedule(int step_count, ScheduleFamily family,
                             const ScheduleParams& params) {
  require(step_count >= 1, "build_schedule: step_count must be >= 1");

  NoiseSchedule s;
  s.step_count = step_count;
  s.alphas.assign(static_cast<size_t>(step_count) + 1, 1.0);
  s.alpha_bars.assign(static_cast<size_t>(step_count) + 1, 1.0);

  for (int k = 1; k <= step_count; ++k) {
    double alpha = 0.0;
    switch (family) {
      case ScheduleFamily::LinearBeta: {
        const double beta =
            step_count == 1
                ? params.beta_min
                : params.beta_min + (params.beta_max - params.beta_min) *
                                        static_cast<double>(k - 1) /
                                        static_cast<double>(step_count - 1);
        alpha = 1.0 - beta;
        break;
      }
      case ScheduleFamily::Cosine: {
        const double f0 = cosine_abar(0.0, params.cosine_offset);
        const double hi = cosine_abar(static_cast<double>(k) / step_count,
                                      params.cosine_offset) / f0;
        const double lo = cosine_abar(static_cast<double>(k - 1) / step_count,
                                      params.cosine_offset) / f0;
        alpha = 1.0 - std::min(1.0 - hi / lo, 0.999);
        break;
      }
      case ScheduleFamily::ConstantAlpha:
        alpha = params.alpha;
        break;
    }
    require(alpha > 0.0 && alpha <= 1.0,
            "build_schedule: alpha_" + std::to_string(k) + " = " +
                std::to_string(alpha) + " outside (0,1]");
    s.alphas[static_cast<size_t>(k)] = alpha;
    s.alpha_bars[static_cast<size_t>(k)] =
        s.alpha_bars[static_cast<size_t>(k - 1)] * alpha;
  }
  return s;
}

ScheduleFamily schedule_family_from_string(const std::string& name) {
  if (name == "linear-beta") return ScheduleFamily::LinearBeta;
  if (name == "cosine") return ScheduleFamily::Cosine;
  if (name == "constant-alpha") return ScheduleFamily::ConstantAlpha;
  throw std::invalid_argument("unknown schedule family: " + name);
}

std::string to_string(ScheduleFamily family) {
  switch (family) {
    case ScheduleFamily::LinearBeta: return "linear-beta";
    case ScheduleFamily::Cosine: return "cosine";
    case ScheduleFamily::ConstantAlpha: return "constant-alpha";
  }
  return "?";
}

Vec forward_noising(const NoiseSchedule& schedule, const Vec& x0, int k, Rng& rng) {
  require(k >= 0 && k <= schedule.step_count, "forward_noising: k out of range");
  require(x0.allFinite(), "forward_noising: x0 must be finite");
  const double abar = schedule.alpha_bar(k);
  if (k == 0) return x0;
  return std::sqrt(abar) * x0 +
         std::sqrt(1.0 - abar) * normal_vector(rng, x0.size());
}

}  // namespace stsl
