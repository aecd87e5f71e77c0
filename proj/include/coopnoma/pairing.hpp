#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace coopnoma {

// Sum rates for a two-user group served orthogonally: each user gets half the
// channel uses at full power, so rate = (1/2) log2(1 + rho gain).
std::pair<double, double> pair_rates_tdma(double gain_m, double gain_n, double rho);

// Sum rates for the same pair served by power-domain superposition with SIC:
// the weak user m (gain_m <= gain_n, power p_m^2 >= p_n^2, p_m^2+p_n^2 = 1)
// decodes under the strong user's interference; the strong user n subtracts
// m's signal first.
std::pair<double, double> pair_rates_noma(double gain_m, double gain_n, double rho,
                                          double p_m_sq, double p_n_sq);

// (NOMA sum rate) - (TDMA sum rate) for the pair.
double sum_rate_gap_exact(double gain_m, double gain_n, double rho, double p_m_sq,
                          double p_n_sq);

// High-SNR limit of the gap: (1/2) log2(gain_n) - (1/2) log2(gain_m).
// Independent of the power split. Throws on a zero gain (gap diverges).
double gap_high_snr(double gain_m, double gain_n);

struct PairingCandidate {
  int partner_index = 0;  // m, ranked from the weakest
  double mean_tdma_sum_rate = 0.0;
  double mean_noma_sum_rate = 0.0;
  double mean_gap_exact = 0.0;
  double mean_gap_predicted = 0.0;
};

// Pairing the best-ranked of K users with each weaker candidate m.
struct PairingReport {
  int num_users = 0;
  double rho = 0.0;
  double p_m_sq = 0.0;
  long trials = 0;
  std::uint64_t seed = 0;
  std::vector<PairingCandidate> candidates;  // sorted by partner index
};

// Draws K ordered unit-mean exponential gains per trial and averages, for
// every m in 1..K-1, the exact and predicted sum-rate gaps of the pair
// (user m, user K) with power split (p_m_sq, 1 - p_m_sq). Deterministic for
// a given seed regardless of the executing thread count.
PairingReport pairing_study(int num_users, double rho, double p_m_sq, long trials,
                            std::uint64_t seed, int threads = 0);

}  // namespace coopnoma
