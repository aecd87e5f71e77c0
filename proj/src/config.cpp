#include "coopnoma/config.hpp"

#include <cmath>
#include <stdexcept>

namespace coopnoma {

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

double linear_to_db(double linear) { return 10.0 * std::log10(linear); }

SystemConfig SystemConfig::defaults(int num_users) {
  if (num_users < 1) throw std::invalid_argument("num_users must be >= 1");
  SystemConfig cfg;
  cfg.num_users = num_users;
  cfg.target_rates.resize(num_users);
  cfg.power_alloc.resize(num_users);
  double norm = (std::pow(4.0, num_users) - 1.0) / 3.0;  // sum of 4^0..4^(K-1)
  for (int k = 1; k <= num_users; ++k) {
    cfg.target_rates[k - 1] = 0.5 * k;
    cfg.power_alloc[k - 1] = std::pow(4.0, num_users - k) / norm;
  }
  cfg.relay_alloc.resize(num_users >= 2 ? num_users - 1 : 0);
  for (int j = 2; j <= num_users; ++j) {
    cfg.relay_alloc[j - 2].assign(j - 1, 1.0 / (j - 1));
  }
  return cfg;
}

void SystemConfig::validate() const {
  if (num_users < 1) throw std::invalid_argument("num_users must be >= 1");
  if (!(transmit_snr > 0.0)) {
    throw std::invalid_argument("transmit_snr must be positive");
  }
  if (!(inter_user_gain_mean > 0.0)) {
    throw std::invalid_argument("inter_user_gain_mean must be positive");
  }
  auto require_size = [&](const std::vector<double>& v, const char* name) {
    if (static_cast<int>(v.size()) != num_users) {
      throw std::invalid_argument(std::string(name) + " must have num_users entries");
    }
  };
  require_size(target_rates, "target_rates");
  require_size(power_alloc, "power_alloc");
  for (double r : target_rates) {
    if (!(r > 0.0)) throw std::invalid_argument("target_rates entries must be positive");
  }
  double sum = 0.0;
  for (int k = 0; k < num_users; ++k) {
    double p = power_alloc[k];
    if (!(p > 0.0)) throw std::invalid_argument("power_alloc entries must be positive");
    if (k > 0 && p > power_alloc[k - 1] + 1e-12) {
      throw std::invalid_argument("power_alloc must be non-increasing");
    }
    sum += p;
  }
  if (std::abs(sum - 1.0) > 1e-9) {
    throw std::invalid_argument("power_alloc must sum to 1");
  }
  if (static_cast<int>(relay_alloc.size()) != (num_users >= 2 ? num_users - 1 : 0)) {
    throw std::invalid_argument("relay_alloc must have one row per user 2..K");
  }
  for (int j = 2; j <= num_users; ++j) {
    const auto& row = relay_alloc[j - 2];
    if (static_cast<int>(row.size()) != j - 1) {
      throw std::invalid_argument("relay_alloc row for user " + std::to_string(j) +
                                  " must have " + std::to_string(j - 1) + " entries");
    }
    double rsum = 0.0;
    for (double q : row) {
      if (q < 0.0) throw std::invalid_argument("relay_alloc entries must be >= 0");
      rsum += q;
    }
    if (std::abs(rsum - 1.0) > 1e-9) {
      throw std::invalid_argument("relay_alloc row for user " + std::to_string(j) +
                                  " must sum to 1");
    }
  }
}

double SystemConfig::snr_threshold(int k) const {
  if (k < 1 || k > num_users) throw std::invalid_argument("message index out of range");
  double rate = target_rates[k - 1];
  if (cooperation_mode == CooperationMode::InBand) rate /= num_users;
  return std::exp2(rate) - 1.0;
}

std::vector<double> SystemConfig::snr_thresholds() const {
  std::vector<double> eps(num_users);
  for (int k = 1; k <= num_users; ++k) eps[k - 1] = snr_threshold(k);
  return eps;
}

double SystemConfig::relay_coeff(int relaying_user, int message) const {
  if (relaying_user < 2 || relaying_user > num_users) {
    throw std::invalid_argument("relaying user out of range");
  }
  if (message < 1 || message >= relaying_user) {
    throw std::invalid_argument("relayed message out of range");
  }
  return relay_alloc[relaying_user - 2][message - 1];
}

std::string to_string(CooperationMode mode) {
  return mode == CooperationMode::ShortRange ? "short_range" : "in_band";
}

std::string to_string(RelayBehavior behavior) {
  return behavior == RelayBehavior::DecodeAndForward ? "decode_and_forward"
                                                     : "genie_aided";
}

}  // namespace coopnoma
