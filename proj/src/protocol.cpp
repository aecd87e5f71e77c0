#include "coopnoma/protocol.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace coopnoma {

const char* scheme_name(Scheme scheme) {
  switch (scheme) {
    case Scheme::OrthogonalMA: return "orthogonal_ma";
    case Scheme::NonCooperativeNoma: return "non_cooperative_noma";
    case Scheme::CooperativeNoma: return "cooperative_noma";
  }
  return "unknown";
}

bool scheme_from_name(const std::string& name, Scheme& out) {
  if (name == "orthogonal_ma") { out = Scheme::OrthogonalMA; return true; }
  if (name == "non_cooperative_noma") { out = Scheme::NonCooperativeNoma; return true; }
  if (name == "cooperative_noma") { out = Scheme::CooperativeNoma; return true; }
  return false;
}

namespace {

// a*g / (b*g + 1/rho); equals rho*a*g when the interference coefficient b is 0.
double sinr_term(double gain, double a, double b, double inv_rho) {
  return a * gain / (b * gain + inv_rho);
}

void check_observer_message(const SystemConfig& config, int observer, int message) {
  if (observer < 1 || observer > config.num_users) {
    throw std::invalid_argument("observer index out of range");
  }
  if (message < 1 || message > observer) {
    throw std::invalid_argument("message index must satisfy 1 <= k <= observer");
  }
}

}  // namespace

double snr_direct(const ChannelRealization& real, const SystemConfig& config,
                  int observer, int message) {
  check_observer_message(config, observer, message);
  double interference = 0.0;
  for (int m = message + 1; m <= config.num_users; ++m) {
    interference += config.power_alloc[m - 1];
  }
  return sinr_term(real.direct_gains[observer - 1], config.power_alloc[message - 1],
                   interference, 1.0 / config.transmit_snr);
}

double snr_cooperative(const ChannelRealization& real, const SystemConfig& config,
                       int observer, int message,
                       const std::vector<int>& active_relays) {
  check_observer_message(config, observer, message);
  if (observer > config.num_users - 1) {
    throw std::invalid_argument("the best-ranked user receives no cooperative phase");
  }
  double total = snr_direct(real, config, observer, message);
  double inv_rho = 1.0 / config.transmit_snr;
  for (int relay : active_relays) {
    if (relay <= observer || relay > config.num_users) {
      throw std::invalid_argument("active relay " + std::to_string(relay) +
                                  " is not ranked above observer " +
                                  std::to_string(observer));
    }
    // Relay `relay` forwards messages 1..relay-1, so it always carries
    // `message` (message <= observer < relay).
    double interference = 0.0;
    for (int m = message + 1; m < relay; ++m) {
      interference += config.relay_coeff(relay, m);
    }
    total += sinr_term(real.inter_user(relay, observer),
                       config.relay_coeff(relay, message), interference, inv_rho);
  }
  return total;
}

std::size_t DecodeOutcome::index(int observer, int message) {
  return static_cast<std::size_t>(observer) * (observer - 1) / 2 + (message - 1);
}

bool DecodeOutcome::ok(int observer, int message) const {
  if (observer < 1 || observer > num_users || message < 1 || message > observer) {
    throw std::invalid_argument("decode table index out of range");
  }
  return success[index(observer, message)] != 0;
}

double DecodeOutcome::snr_at(int observer, int message) const {
  if (observer < 1 || observer > num_users || message < 1 || message > observer) {
    throw std::invalid_argument("decode table index out of range");
  }
  return snr[index(observer, message)];
}

DecodeOutcome evaluate_decode(const ChannelRealization& real,
                              const SystemConfig& config, Scheme scheme) {
  int num_users = config.num_users;
  DecodeOutcome out;
  out.num_users = num_users;
  std::size_t table = static_cast<std::size_t>(num_users) * (num_users + 1) / 2;
  out.success.assign(table, 1);
  out.snr.assign(table, 0.0);
  out.user_ok.assign(num_users, 1);

  if (scheme == Scheme::OrthogonalMA) {
    for (int j = 1; j <= num_users; ++j) {
      double snr = config.transmit_snr * real.direct_gains[j - 1];
      double threshold = std::exp2(num_users * config.target_rates[j - 1]) - 1.0;
      bool ok = snr > threshold;
      out.snr[DecodeOutcome::index(j, j)] = snr;
      out.success[DecodeOutcome::index(j, j)] = ok;
      out.user_ok[j - 1] = ok;
    }
    return out;
  }

  std::vector<double> eps(num_users);
  for (int k = 1; k <= num_users; ++k) {
    double rate = config.target_rates[k - 1];
    if (scheme == Scheme::CooperativeNoma &&
        config.cooperation_mode == CooperationMode::InBand) {
      rate /= num_users;
    }
    eps[k - 1] = std::exp2(rate) - 1.0;
  }

  if (scheme == Scheme::NonCooperativeNoma) {
    for (int j = 1; j <= num_users; ++j) {
      bool all_ok = true;
      for (int k = 1; k <= j; ++k) {
        double snr = snr_direct(real, config, j, k);
        bool ok = snr > eps[k - 1];
        out.snr[DecodeOutcome::index(j, k)] = snr;
        out.success[DecodeOutcome::index(j, k)] = ok;
        all_ok = all_ok && ok;
      }
      out.user_ok[j - 1] = all_ok;
    }
    return out;
  }

  // CooperativeNoma: evaluate from the best user down so every potential
  // relay's own outcome is known before it is consulted.
  std::vector<int> active;
  for (int j = num_users; j >= 1; --j) {
    active.clear();
    for (int r = j + 1; r <= num_users; ++r) {
      if (config.relay_behavior == RelayBehavior::GenieAided || out.user_ok[r - 1]) {
        active.push_back(r);
      }
    }
    bool all_ok = true;
    for (int k = 1; k <= j; ++k) {
      double snr = j == num_users ? snr_direct(real, config, j, k)
                                  : snr_cooperative(real, config, j, k, active);
      bool ok = snr > eps[k - 1];
      out.snr[DecodeOutcome::index(j, k)] = snr;
      out.success[DecodeOutcome::index(j, k)] = ok;
      all_ok = all_ok && ok;
    }
    out.user_ok[j - 1] = all_ok;
  }
  return out;
}

}  // namespace coopnoma
