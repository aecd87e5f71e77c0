#include "coopnoma/channel.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace coopnoma {

double ChannelRealization::inter_user(int j, int k) const {
  int num_users = static_cast<int>(direct_gains.size());
  if (j < 2 || j > num_users || k < 1 || k >= j) {
    throw std::invalid_argument("inter-user gain index out of range");
  }
  return inter_user_gains[j - 2][k - 1];
}

ChannelRealization sample_realization(const SystemConfig& config, Rng& rng) {
  int num_users = config.num_users;
  ChannelRealization real;
  real.direct_gains.resize(num_users);
  for (int k = 0; k < num_users; ++k) {
    real.direct_gains[k] = rng.next_exponential(1.0);
  }
  std::sort(real.direct_gains.begin(), real.direct_gains.end());
  real.inter_user_gains.resize(num_users >= 2 ? num_users - 1 : 0);
  for (int j = 2; j <= num_users; ++j) {
    auto& row = real.inter_user_gains[j - 2];
    row.resize(j - 1);
    for (int k = 1; k < j; ++k) {
      row[k - 1] = rng.next_exponential(config.inter_user_gain_mean);
    }
  }
  return real;
}

double ordered_gain_cdf_exact(int k, int n, double z) {
  if (k < 1 || n < 1 || k > n) {
    throw std::invalid_argument("order statistic indices require 1 <= k <= n");
  }
  if (!(z >= 0.0)) throw std::invalid_argument("z must be >= 0");
  double p = -std::expm1(-z);  // 1 - e^-z, accurate near 0
  double q = std::exp(-z);
  // C(n,i) p^i q^(n-i), accumulated from i = k upward.
  double binom = 1.0;
  for (int i = 1; i <= k; ++i) binom *= static_cast<double>(n - i + 1) / i;
  double term = binom * std::pow(p, k) * std::pow(q, n - k);
  double sum = term;
  for (int i = k + 1; i <= n; ++i) {
    binom *= static_cast<double>(n - i + 1) / i;
    term = binom * std::pow(p, i) * std::pow(q, n - i);
    sum += term;
  }
  return std::min(sum, 1.0);
}

double gamma_order_cdf(int order, double upper) {
  if (order < 1) throw std::invalid_argument("order must be >= 1");
  if (!(upper >= 0.0)) throw std::invalid_argument("upper limit must be >= 0");
  // 1 - e^-x sum_{j=0}^{order-1} x^j / j!
  double term = 1.0;
  double sum = 1.0;
  for (int j = 1; j < order; ++j) {
    term *= upper / j;
    sum += term;
  }
  double tail = std::exp(-upper) * sum;
  return tail >= 1.0 ? 0.0 : 1.0 - tail;
}

}  // namespace coopnoma
