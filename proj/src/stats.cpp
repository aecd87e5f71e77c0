#include "coopnoma/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace coopnoma {

WilsonInterval wilson_interval(long successes, long trials, double z) {
  if (trials <= 0) throw std::invalid_argument("trials must be positive");
  if (successes < 0 || successes > trials)
    throw std::invalid_argument("successes must lie in [0, trials]");
  if (z <= 0.0) throw std::invalid_argument("z must be positive");
  const double n = static_cast<double>(trials);
  const double p = static_cast<double>(successes) / n;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / n;
  WilsonInterval out;
  out.center = (p + z2 / (2.0 * n)) / denom;
  out.halfwidth =
      z * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n)) / denom;
  return out;
}

double proportion_se(double p_hat, long trials) {
  if (trials <= 0) throw std::invalid_argument("trials must be positive");
  if (p_hat < 0.0 || p_hat > 1.0)
    throw std::invalid_argument("proportion must lie in [0, 1]");
  return std::sqrt(p_hat * (1.0 - p_hat) / static_cast<double>(trials));
}

double ks_statistic(std::vector<double> samples,
                    const std::function<double(double)>& cdf) {
  if (samples.empty()) throw std::invalid_argument("samples must be non-empty");
  std::sort(samples.begin(), samples.end());
  const double n = static_cast<double>(samples.size());
  double worst = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double f = cdf(samples[i]);
    const double hi = (static_cast<double>(i) + 1.0) / n - f;
    const double lo = f - static_cast<double>(i) / n;
    worst = std::max(worst, std::max(hi, lo));
  }
  return worst;
}

}  // namespace coopnoma
