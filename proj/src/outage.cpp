#include "coopnoma/outage.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "coopnoma/channel.hpp"

namespace coopnoma {

namespace {

std::string floor_message(double eps, double a, double b, int user, int message,
                          int phase) {
  std::string msg = "outage floor: threshold " + std::to_string(eps) +
                    " >= ceiling a/b = " + std::to_string(a / b);
  if (user > 0) {
    msg += " (user " + std::to_string(user) + ", message " + std::to_string(message) +
           ", phase " + std::to_string(phase) + ")";
  }
  return msg;
}

void check_spec(const ZSpec& spec) {
  if (!(spec.a > 0.0)) throw std::invalid_argument("ZSpec.a must be positive");
  if (spec.b < 0.0) throw std::invalid_argument("ZSpec.b must be >= 0");
  if (!(spec.rho > 0.0)) throw std::invalid_argument("ZSpec.rho must be positive");
  if (spec.order < 1) throw std::invalid_argument("ZSpec.order must be >= 1");
}

// Transformed argument u = z / (rho (a - b z)), valid below the ceiling.
double transformed_arg(const ZSpec& spec, double z) {
  return z / (spec.rho * (spec.a - spec.b * z));
}

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

double binomial(int n, int k) {
  double b = 1.0;
  for (int i = 1; i <= k; ++i) b *= static_cast<double>(n - i + 1) / i;
  return b;
}

}  // namespace

OutageFloorError::OutageFloorError(double eps_, double a_, double b_, int user_,
                                   int message_, int phase_)
    : std::runtime_error(floor_message(eps_, a_, b_, user_, message_, phase_)),
      eps(eps_), a(a_), b(b_), user(user_), message(message_), phase(phase_) {}

double z_cdf(const ZSpec& spec, double z) {
  check_spec(spec);
  if (!(z >= 0.0)) throw std::invalid_argument("z must be >= 0");
  if (spec.b > 0.0 && z >= spec.a / spec.b) return 1.0;
  double u = transformed_arg(spec, z);
  if (spec.order == 1) return -std::expm1(-u);
  return gamma_order_cdf(spec.order, u);
}

double z_cdf_high_snr(const ZSpec& spec, double eps) {
  check_spec(spec);
  if (!(eps >= 0.0)) throw std::invalid_argument("eps must be >= 0");
  if (spec.b > 0.0 && eps >= spec.a / spec.b) {
    throw OutageFloorError(eps, spec.a, spec.b);
  }
  double u = transformed_arg(spec, eps);
  if (spec.order == 1) return u;
  return std::pow(u, spec.order) / factorial(spec.order);
}

double outage_union_bound(const SystemConfig& config, int user, BoundMode mode) {
  config.validate();
  int num_users = config.num_users;
  if (user < 1 || user > num_users) {
    throw std::invalid_argument("user index out of range");
  }
  int n = num_users - user;  // number of relaying slots the user benefits from
  double rho = config.transmit_snr;
  double sum = 0.0;
  for (int k = 1; k <= user; ++k) {
    double eps = config.snr_threshold(k);
    double product = 1.0;
    for (int i = 0; i <= n; ++i) {
      double a, b, effective_rho;
      if (i == 0) {
        a = config.power_alloc[k - 1];
        b = 0.0;
        for (int m = k + 1; m <= num_users; ++m) b += config.power_alloc[m - 1];
        effective_rho = rho;
      } else {
        int relay = num_users - i + 1;
        a = config.relay_coeff(relay, k);
        b = 0.0;
        for (int m = k + 1; m < relay; ++m) b += config.relay_coeff(relay, m);
        // An exponential gain of mean mu behaves like a unit-mean gain at
        // SNR rho*mu, so the mean folds into the effective SNR.
        effective_rho = rho * config.inter_user_gain_mean;
      }
      if (mode == BoundMode::HighSnr && b > 0.0 && eps >= a / b) {
        throw OutageFloorError(eps, a, b, user, k, i);
      }
      double factor;
      if (a <= 0.0) {
        // A zero allocation carries nothing: the term is identically zero
        // and the per-factor outage event is certain.
        factor = 1.0;
      } else if (b > 0.0 && eps >= a / b) {
        factor = 1.0;
      } else {
        double u = eps / (effective_rho * (a - b * eps));
        if (i == 0) {
          // Ranked direct channel: exact order-statistic CDF (or its leading
          // term), not the gamma surrogate, so the product stays a true
          // upper bound on the simulated outage.
          factor = mode == BoundMode::ExactFactors
                       ? ordered_gain_cdf_exact(user, num_users, u)
                       : binomial(num_users, user) * std::pow(u, user);
        } else {
          factor = mode == BoundMode::ExactFactors ? -std::expm1(-u) : u;
        }
      }
      product *= factor;
    }
    sum += product;
  }
  return std::min(sum, 1.0);
}

double overall_outage(const std::vector<double>& per_user) {
  double survive = 1.0;
  for (double p : per_user) {
    if (!(p >= 0.0) || !(p <= 1.0)) {
      throw std::invalid_argument("per-user outage values must lie in [0,1]");
    }
    survive *= 1.0 - p;
  }
  return 1.0 - survive;
}

double diversity_slope(const std::vector<double>& snr_db_grid,
                       const std::vector<double>& outage_values) {
  if (snr_db_grid.size() != outage_values.size()) {
    throw std::invalid_argument("grid and outage lists must have equal length");
  }
  if (snr_db_grid.size() < 3) {
    throw std::invalid_argument("diversity fit needs at least 3 grid points");
  }
  for (std::size_t i = 0; i < snr_db_grid.size(); ++i) {
    if (i > 0 && !(snr_db_grid[i] > snr_db_grid[i - 1])) {
      throw std::invalid_argument("snr grid must be strictly ascending");
    }
    if (!(outage_values[i] > 0.0)) {
      throw std::invalid_argument(
          "outage value at grid point " + std::to_string(i) +
          " is not positive (insufficient trials to resolve this cell)");
    }
  }
  std::size_t n = snr_db_grid.size();
  double mean_x = 0.0, mean_y = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mean_x += snr_db_grid[i] / 10.0;  // log10(rho)
    mean_y += std::log10(outage_values[i]);
  }
  mean_x /= static_cast<double>(n);
  mean_y /= static_cast<double>(n);
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double dx = snr_db_grid[i] / 10.0 - mean_x;
    double dy = std::log10(outage_values[i]) - mean_y;
    sxy += dx * dy;
    sxx += dx * dx;
  }
  return -sxy / sxx;
}

}  // namespace coopnoma
