#include "coopnoma/pairing.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "coopnoma/rng.hpp"
#include "parallel.hpp"

namespace coopnoma {

std::pair<double, double> pair_rates_tdma(double gain_m, double gain_n, double rho) {
  if (gain_m < 0.0 || gain_n < 0.0 || !(rho > 0.0)) {
    throw std::invalid_argument("gains must be >= 0 and rho positive");
  }
  return {0.5 * std::log2(1.0 + rho * gain_m), 0.5 * std::log2(1.0 + rho * gain_n)};
}

std::pair<double, double> pair_rates_noma(double gain_m, double gain_n, double rho,
                                          double p_m_sq, double p_n_sq) {
  if (gain_m < 0.0 || gain_n < 0.0 || !(rho > 0.0)) {
    throw std::invalid_argument("gains must be >= 0 and rho positive");
  }
  if (gain_m > gain_n) {
    throw std::invalid_argument("gain_m must not exceed gain_n");
  }
  if (std::abs(p_m_sq + p_n_sq - 1.0) > 1e-9 || p_m_sq < p_n_sq || p_n_sq < 0.0) {
    throw std::invalid_argument(
        "power split must satisfy p_m^2 + p_n^2 = 1 and p_m^2 >= p_n^2 >= 0");
  }
  double rate_m =
      std::log2(1.0 + rho * gain_m * p_m_sq / (rho * gain_m * p_n_sq + 1.0));
  double rate_n = std::log2(1.0 + rho * p_n_sq * gain_n);
  return {rate_m, rate_n};
}

double sum_rate_gap_exact(double gain_m, double gain_n, double rho, double p_m_sq,
                          double p_n_sq) {
  auto [noma_m, noma_n] = pair_rates_noma(gain_m, gain_n, rho, p_m_sq, p_n_sq);
  auto [tdma_m, tdma_n] = pair_rates_tdma(gain_m, gain_n, rho);
  return (noma_m + noma_n) - (tdma_m + tdma_n);
}

double gap_high_snr(double gain_m, double gain_n) {
  if (!(gain_m > 0.0) || !(gain_n > 0.0)) {
    throw std::invalid_argument("high-SNR gap requires strictly positive gains");
  }
  return 0.5 * std::log2(gain_n) - 0.5 * std::log2(gain_m);
}

PairingReport pairing_study(int num_users, double rho, double p_m_sq, long trials,
                            std::uint64_t seed, int threads) {
  if (num_users < 2) throw std::invalid_argument("pairing needs at least 2 users");
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  if (!(rho > 0.0)) throw std::invalid_argument("rho must be positive");
  double p_n_sq = 1.0 - p_m_sq;
  if (p_m_sq < p_n_sq || p_n_sq < 0.0) {
    throw std::invalid_argument("p_m_sq must lie in [0.5, 1]");
  }

  int candidates = num_users - 1;
  // Per-chunk partial sums: tdma, noma, exact gap, predicted gap per candidate.
  struct Slot {
    std::vector<double> sums;
  };
  long chunks = detail::chunk_count(trials);
  std::vector<Slot> slots(chunks);

  detail::parallel_chunks(trials, threads, [&](long chunk, long begin, long end) {
    Slot& slot = slots[chunk];
    slot.sums.assign(static_cast<std::size_t>(candidates) * 4, 0.0);
    std::vector<double> gains(num_users);
    for (long t = begin; t < end; ++t) {
      Rng rng = Rng::for_trial(seed, static_cast<std::uint64_t>(t));
      for (int k = 0; k < num_users; ++k) gains[k] = rng.next_exponential(1.0);
      std::sort(gains.begin(), gains.end());
      double gain_n = gains[num_users - 1];
      for (int m = 1; m <= candidates; ++m) {
        double gain_m = gains[m - 1];
        auto [tdma_m, tdma_n] = pair_rates_tdma(gain_m, gain_n, rho);
        auto [noma_m, noma_n] = pair_rates_noma(gain_m, gain_n, rho, p_m_sq, p_n_sq);
        double tdma_sum = tdma_m + tdma_n;
        double noma_sum = noma_m + noma_n;
        double* s = &slot.sums[static_cast<std::size_t>(m - 1) * 4];
        s[0] += tdma_sum;
        s[1] += noma_sum;
        s[2] += noma_sum - tdma_sum;
        s[3] += gap_high_snr(gain_m, gain_n);
      }
    }
  });

  PairingReport report;
  report.num_users = num_users;
  report.rho = rho;
  report.p_m_sq = p_m_sq;
  report.trials = trials;
  report.seed = seed;
  report.candidates.resize(candidates);
  for (int m = 1; m <= candidates; ++m) {
    double tdma = 0.0, noma = 0.0, gap = 0.0, predicted = 0.0;
    for (long c = 0; c < chunks; ++c) {
      const double* s = &slots[c].sums[static_cast<std::size_t>(m - 1) * 4];
      tdma += s[0];
      noma += s[1];
      gap += s[2];
      predicted += s[3];
    }
    auto& cand = report.candidates[m - 1];
    cand.partner_index = m;
    cand.mean_tdma_sum_rate = tdma / static_cast<double>(trials);
    cand.mean_noma_sum_rate = noma / static_cast<double>(trials);
    cand.mean_gap_exact = gap / static_cast<double>(trials);
    cand.mean_gap_predicted = predicted / static_cast<double>(trials);
  }
  return report;
}

}  // namespace coopnoma
