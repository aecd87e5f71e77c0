#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "coopnoma/config.hpp"
#include "coopnoma/outage.hpp"
#include "coopnoma/protocol.hpp"

namespace coopnoma {

// One simulated experiment: a scenario evaluated over a transmit-SNR grid for
// one or more access schemes. `config.transmit_snr` is ignored; each grid
// point overrides it. Every trial draws one channel realization and reuses it
// across all grid points and schemes (common random numbers), so curves from
// the same sweep are directly comparable.
struct SweepSpec {
  SystemConfig config;
  std::vector<double> snr_db;  // strictly ascending
  long trials = 100000;
  std::uint64_t seed = 12345;
  std::vector<Scheme> schemes = {Scheme::CooperativeNoma};
  int threads = 0;  // 0 = use all hardware threads

  // Throws std::invalid_argument naming the first violated invariant.
  void validate() const;
};

// Binomial estimate for one (scheme, SNR point, user) cell.
struct CellEstimate {
  long trials = 0;
  long failures = 0;
  double outage = 0.0;        // failures / trials
  double ci_halfwidth = 0.0;  // 95% Wilson half-width
  // Zero observed failures: the true rate is only known to be below the
  // sweep's resolution (about 1/trials), not zero.
  bool below_resolution = false;
};

// All estimates for one scheme at one SNR point.
struct SchemePointEstimate {
  std::vector<CellEstimate> per_user;  // index k-1, rank from the weakest
  // Realized union: a trial counts as failed when any user failed in it.
  CellEstimate overall;
  // 1 - prod(1 - p_k) over the per-user estimates, for comparison with the
  // realized union (the two differ when per-user failures are correlated).
  double overall_composed = 0.0;
};

struct OutageEstimate {
  int num_users = 0;
  long trials = 0;
  std::uint64_t seed = 0;
  std::vector<double> snr_db;
  std::vector<Scheme> schemes;
  std::vector<std::vector<SchemePointEstimate>> points;  // [scheme][point]

  const SchemePointEstimate& at(std::size_t scheme_index,
                                std::size_t point_index) const;
};

OutageEstimate run_outage_sweep(const SweepSpec& spec);

// Largest common rate target (all users set to the same R) whose overall
// outage stays at or below `target_outage`, found by bisection.
struct CapacityEstimate {
  Scheme scheme = Scheme::CooperativeNoma;
  double snr_db = 0.0;
  double rate_bpcu = 0.0;       // largest rate observed to meet the target
  double outage_at_rate = 0.0;  // estimated overall outage at rate_bpcu
  double target_outage = 0.0;
  double tolerance = 0.0;  // rate_bpcu + tolerance was observed to miss
  long trials = 0;
  std::uint64_t seed = 0;
};

// Raised when even the bracket's lower end misses the outage target; carries
// the endpoint outages so callers can report how far off the bracket was.
class BracketError : public std::runtime_error {
 public:
  BracketError(double rate_min, double rate_max, double outage_at_min,
               double outage_at_max, double target);
  double rate_min;
  double rate_max;
  double outage_at_min;
  double outage_at_max;
  double target;
};

// Bisects on the common rate in [rate_min, rate_max] under the given scheme
// at one SNR point, with the same realizations replayed at every probe.
// Postconditions: outage(rate_bpcu) <= target_outage, and either
// rate_bpcu == rate_max or outage(rate_bpcu + tolerance') > target_outage for
// some tolerance' <= tolerance. A target of 1 therefore returns rate_max.
CapacityEstimate run_capacity_search(const SystemConfig& config, Scheme scheme,
                                     double snr_db, double target_outage,
                                     double rate_min, double rate_max,
                                     double tolerance, long trials,
                                     std::uint64_t seed, int threads = 0);

// Simulates the cooperative scheme with every relay forced active
// (GenieAided, the regime the analytical bound describes) and tabulates the
// analytical per-user bounds next to the estimates. A cell is flagged as a
// violation when the simulated outage exceeds the exact-factor bound by more
// than three standard errors.
OutageBoundReport run_bound_validation(const SweepSpec& spec);

}  // namespace coopnoma
