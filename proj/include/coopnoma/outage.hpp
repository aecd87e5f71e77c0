#pragma once

#include <stdexcept>
#include <vector>

#include "coopnoma/config.hpp"

namespace coopnoma {

// Both direct-phase and relay-phase SINR terms share the shape
// z = a x / (b x + 1/rho) for a channel gain x: `a` is the serving power
// fraction, `b` the residual-interference fraction, `order` the rank of the
// serving channel (1 for an unordered gain, K-n when x is the ordered
// direct-channel gain of user K-n).
struct ZSpec {
  double a = 1.0;
  double b = 0.0;
  double rho = 1.0;
  int order = 1;
};

// Raised when a threshold sits at or above the interference ceiling a/b:
// the outage probability saturates at 1 and no diversity analysis applies.
class OutageFloorError : public std::runtime_error {
 public:
  OutageFloorError(double eps, double a, double b, int user = 0, int message = 0,
                   int phase = -1);
  double eps;  // offending threshold
  double a;
  double b;
  int user;     // 0 when raised outside a bound computation
  int message;  // k of the offending factor, 0 if not applicable
  int phase;    // i of the offending factor, -1 if not applicable
};

// CDF of z evaluated at `z`: 1 when b > 0 and z >= a/b, else the exponential
// law on the transformed argument z/(rho (a - b z)); order > 1 applies the
// gamma-order surrogate for the ordered direct channel.
double z_cdf(const ZSpec& spec, double z);

// Leading high-SNR term of z_cdf at threshold eps: u^order / order! with
// u = eps/(rho (a - b eps)), which reduces to eps/(rho a) (order 1) and
// eps^m/(m! a^m rho^m) when b = 0. Throws OutageFloorError when eps >= a/b.
double z_cdf_high_snr(const ZSpec& spec, double eps);

enum class BoundMode { ExactFactors, HighSnr };

// Union/product outage bound for the given user (rank from the weakest):
// sum over its messages k of the product over phases i of P(z_{k,i} < eps_k).
// Relay factors use z_cdf / z_cdf_high_snr (exact for exponential inter-user
// gains, scaled by config.inter_user_gain_mean); the direct-phase factor uses
// the exact order-statistic CDF of the user's ranked gain so the result is a
// true upper bound on the genie-aided simulated outage. Clipped to [0,1].
// HighSnr mode throws OutageFloorError naming the offending (k,i) when any
// threshold violates eps_k < a/b.
double outage_union_bound(const SystemConfig& config, int user, BoundMode mode);

// 1 - prod(1 - p_k); inputs must be probabilities.
double overall_outage(const std::vector<double>& per_user);

// Negated least-squares slope of log10(outage) against log10(rho) over the
// window, so a diversity-K curve yields about K. Requires >= 3 points and
// strictly positive outage values (zero cells are reported, not dropped).
double diversity_slope(const std::vector<double>& snr_db_grid,
                       const std::vector<double>& outage_values);

// Side-by-side analytical vs simulated outage, filled by run_bound_validation.
struct OutageBoundReport {
  std::vector<double> snr_db;
  int num_users = 0;
  // Indexed [point][user-1].
  std::vector<std::vector<double>> bound_exact;
  std::vector<std::vector<double>> bound_high_snr;  // NaN where the floor bites
  std::vector<std::vector<double>> simulated;
  std::vector<std::vector<double>> simulated_halfwidth;
  std::vector<std::vector<bool>> violation;  // sim - 3 SE > exact bound
  std::vector<double> overall_from_bounds;   // independent composition of bounds
  long trials = 0;
};

}  // namespace coopnoma
