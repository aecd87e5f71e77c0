#pragma once

#include <vector>

#include "coopnoma/config.hpp"
#include "coopnoma/rng.hpp"

namespace coopnoma {

// One Rayleigh-fading snapshot: squared channel magnitudes only.
// direct_gains are sorted ascending so index k-1 is the k-th weakest user.
struct ChannelRealization {
  std::vector<double> direct_gains;  // |h_k|^2, ascending, size K
  // inter_user_gains[j-2][k-1] = |g_{j,k}|^2 between relaying user j = 2..K
  // and listener k < j.
  std::vector<std::vector<double>> inter_user_gains;

  double inter_user(int j, int k) const;  // bounds-checked accessor
};

// Draws K unit-mean exponential direct gains (then sorts them) followed by
// the inter-user gains in (j, k) lexicographic order, so a given rng state
// always yields the same realization.
ChannelRealization sample_realization(const SystemConfig& config, Rng& rng);

// Exact CDF of the k-th smallest of n iid unit-mean exponential gains:
// sum_{i=k}^{n} C(n,i) (1-e^-z)^i e^-z(n-i).
double ordered_gain_cdf_exact(int k, int n, double z);

// Regularized lower incomplete gamma P(order, upper) for integer order >= 1,
// via the closed form 1 - e^-x sum_{j<order} x^j/j!.
double gamma_order_cdf(int order, double upper);

}  // namespace coopnoma
