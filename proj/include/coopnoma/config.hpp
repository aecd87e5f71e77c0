#pragma once

#include <string>
#include <vector>

namespace coopnoma {

// How decode thresholds are derived from the per-user rate targets.
//   ShortRange: cooperation happens out of band, threshold 2^R_k - 1.
//   InBand:     cooperation consumes the shared band, threshold 2^(R_k/K) - 1.
enum class CooperationMode { ShortRange, InBand };

// Whether a better-ranked user relays only after decoding everything
// (DecodeAndForward) or unconditionally (GenieAided, analysis device).
enum class RelayBehavior { DecodeAndForward, GenieAided };

double db_to_linear(double db);
double linear_to_db(double linear);

// Full description of one downlink scenario: K superposed users whose
// channel gains are ranked ascending (user 1 weakest), a shared transmit
// SNR, per-user rate targets, and the power splits for the direct phase
// (power_alloc) and each user's relaying slot (relay_alloc).
struct SystemConfig {
  int num_users = 2;
  double transmit_snr = 100.0;  // linear scale
  std::vector<double> target_rates;  // R_k in bits per channel use, size K
  std::vector<double> power_alloc;   // p_k^2, descending, sums to 1
  // relay_alloc[j-2][m-1] = q_{j,m}^2 for relaying user j = 2..K and
  // message m = 1..j-1; each row sums to 1.
  std::vector<std::vector<double>> relay_alloc;
  double inter_user_gain_mean = 1.0;
  CooperationMode cooperation_mode = CooperationMode::ShortRange;
  RelayBehavior relay_behavior = RelayBehavior::DecodeAndForward;

  // Documented defaults for any K: rates 0.5*k, power p_k^2 = 3*4^(K-k)/(4^K-1)
  // (descending, exactly (0.8, 0.2) at K=2), relay rows split equally.
  static SystemConfig defaults(int num_users = 2);

  // Throws std::invalid_argument naming the first violated invariant.
  void validate() const;

  // Decode threshold eps_k for message k (1-based), per cooperation_mode.
  double snr_threshold(int k) const;
  std::vector<double> snr_thresholds() const;

  double relay_coeff(int relaying_user, int message) const;  // q_{j,m}^2
};

std::string to_string(CooperationMode mode);
std::string to_string(RelayBehavior behavior);

}  // namespace coopnoma
