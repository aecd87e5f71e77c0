#include "coopnoma/montecarlo.hpp"

#include <algorithm>
#include <limits>

#include "coopnoma/channel.hpp"
#include "coopnoma/rng.hpp"
#include "coopnoma/stats.hpp"
#include "parallel.hpp"

namespace coopnoma {

namespace {

CellEstimate make_cell(long failures, long trials) {
  CellEstimate cell;
  cell.trials = trials;
  cell.failures = failures;
  cell.outage = static_cast<double>(failures) / static_cast<double>(trials);
  cell.ci_halfwidth = wilson_interval(failures, trials).halfwidth;
  cell.below_resolution = failures == 0;
  return cell;
}

bool any_user_failed(const DecodeOutcome& outcome) {
  for (std::uint8_t ok : outcome.user_ok)
    if (!ok) return true;
  return false;
}

}  // namespace

void SweepSpec::validate() const {
  config.validate();
  if (snr_db.empty())
    throw std::invalid_argument("snr_db grid must be non-empty");
  for (std::size_t i = 1; i < snr_db.size(); ++i)
    if (!(snr_db[i] > snr_db[i - 1]))
      throw std::invalid_argument("snr_db grid must be strictly ascending");
  if (trials < 1) throw std::invalid_argument("trials must be at least 1");
  if (schemes.empty())
    throw std::invalid_argument("schemes must be non-empty");
  for (std::size_t i = 0; i < schemes.size(); ++i)
    for (std::size_t j = i + 1; j < schemes.size(); ++j)
      if (schemes[i] == schemes[j])
        throw std::invalid_argument("schemes must not repeat");
  if (threads < 0) throw std::invalid_argument("threads must be non-negative");
}

const SchemePointEstimate& OutageEstimate::at(std::size_t scheme_index,
                                              std::size_t point_index) const {
  if (scheme_index >= points.size())
    throw std::out_of_range("scheme index out of range");
  if (point_index >= points[scheme_index].size())
    throw std::out_of_range("point index out of range");
  return points[scheme_index][point_index];
}

OutageEstimate run_outage_sweep(const SweepSpec& spec) {
  spec.validate();
  const int num_users = spec.config.num_users;
  const std::size_t num_points = spec.snr_db.size();
  const std::size_t num_schemes = spec.schemes.size();

  std::vector<SystemConfig> point_configs(num_points, spec.config);
  for (std::size_t p = 0; p < num_points; ++p)
    point_configs[p].transmit_snr = db_to_linear(spec.snr_db[p]);

  // Per (scheme, point): one failure counter per user plus one for the
  // realized union. Counters live in per-chunk slots so the reduction is
  // independent of how chunks were assigned to threads.
  const std::size_t per_cell = static_cast<std::size_t>(num_users) + 1;
  const std::size_t counters = num_schemes * num_points * per_cell;
  const long chunks = detail::chunk_count(spec.trials);
  std::vector<std::vector<long>> slots(
      static_cast<std::size_t>(chunks), std::vector<long>(counters, 0));

  detail::parallel_chunks(
      spec.trials, spec.threads, [&](long chunk, long begin, long end) {
        auto& slot = slots[static_cast<std::size_t>(chunk)];
        for (long t = begin; t < end; ++t) {
          Rng rng = Rng::for_trial(spec.seed, static_cast<std::uint64_t>(t));
          const ChannelRealization real = sample_realization(spec.config, rng);
          std::size_t base = 0;
          for (std::size_t s = 0; s < num_schemes; ++s) {
            for (std::size_t p = 0; p < num_points; ++p) {
              const DecodeOutcome outcome =
                  evaluate_decode(real, point_configs[p], spec.schemes[s]);
              bool any_failed = false;
              for (int k = 1; k <= num_users; ++k) {
                if (!outcome.user_ok[static_cast<std::size_t>(k) - 1]) {
                  ++slot[base + static_cast<std::size_t>(k) - 1];
                  any_failed = true;
                }
              }
              if (any_failed) ++slot[base + static_cast<std::size_t>(num_users)];
              base += per_cell;
            }
          }
        }
      });

  std::vector<long> totals(counters, 0);
  for (const auto& slot : slots)
    for (std::size_t i = 0; i < counters; ++i) totals[i] += slot[i];

  OutageEstimate out;
  out.num_users = num_users;
  out.trials = spec.trials;
  out.seed = spec.seed;
  out.snr_db = spec.snr_db;
  out.schemes = spec.schemes;
  out.points.resize(num_schemes);
  std::size_t base = 0;
  for (std::size_t s = 0; s < num_schemes; ++s) {
    out.points[s].resize(num_points);
    for (std::size_t p = 0; p < num_points; ++p) {
      SchemePointEstimate& est = out.points[s][p];
      est.per_user.reserve(static_cast<std::size_t>(num_users));
      std::vector<double> rates;
      rates.reserve(static_cast<std::size_t>(num_users));
      for (int k = 1; k <= num_users; ++k) {
        est.per_user.push_back(
            make_cell(totals[base + static_cast<std::size_t>(k) - 1],
                      spec.trials));
        rates.push_back(est.per_user.back().outage);
      }
      est.overall = make_cell(
          totals[base + static_cast<std::size_t>(num_users)], spec.trials);
      est.overall_composed = overall_outage(rates);
      base += per_cell;
    }
  }
  return out;
}

namespace {

// Overall failure count for a single fully-specified config. Used by the
// capacity bisection, where every probe replays the same trial streams.
long count_overall_failures(const SystemConfig& config, Scheme scheme,
                            long trials, std::uint64_t seed, int threads) {
  const long chunks = detail::chunk_count(trials);
  std::vector<long> slot(static_cast<std::size_t>(chunks), 0);
  detail::parallel_chunks(
      trials, threads, [&](long chunk, long begin, long end) {
        long local = 0;
        for (long t = begin; t < end; ++t) {
          Rng rng = Rng::for_trial(seed, static_cast<std::uint64_t>(t));
          const ChannelRealization real = sample_realization(config, rng);
          if (any_user_failed(evaluate_decode(real, config, scheme))) ++local;
        }
        slot[static_cast<std::size_t>(chunk)] = local;
      });
  long total = 0;
  for (long v : slot) total += v;
  return total;
}

}  // namespace

BracketError::BracketError(double rate_min_in, double rate_max_in,
                           double outage_at_min_in, double outage_at_max_in,
                           double target_in)
    : std::runtime_error(
          "outage target is not reachable inside the rate bracket"),
      rate_min(rate_min_in),
      rate_max(rate_max_in),
      outage_at_min(outage_at_min_in),
      outage_at_max(outage_at_max_in),
      target(target_in) {}

CapacityEstimate run_capacity_search(const SystemConfig& config, Scheme scheme,
                                     double snr_db, double target_outage,
                                     double rate_min, double rate_max,
                                     double tolerance, long trials,
                                     std::uint64_t seed, int threads) {
  config.validate();
  if (!(target_outage > 0.0) || target_outage > 1.0)
    throw std::invalid_argument("target outage must lie in (0, 1]");
  if (!(rate_min > 0.0))
    throw std::invalid_argument("rate bracket must start above zero");
  if (!(rate_max > rate_min))
    throw std::invalid_argument("rate bracket must have positive width");
  if (!(tolerance > 0.0))
    throw std::invalid_argument("rate tolerance must be positive");
  if (trials < 1) throw std::invalid_argument("trials must be at least 1");
  if (threads < 0) throw std::invalid_argument("threads must be non-negative");

  SystemConfig base = config;
  base.transmit_snr = db_to_linear(snr_db);
  const auto probe = [&](double rate) {
    SystemConfig probe_config = base;
    probe_config.target_rates.assign(
        static_cast<std::size_t>(base.num_users), rate);
    const long failures =
        count_overall_failures(probe_config, scheme, trials, seed, threads);
    return static_cast<double>(failures) / static_cast<double>(trials);
  };

  CapacityEstimate out;
  out.scheme = scheme;
  out.snr_db = snr_db;
  out.target_outage = target_outage;
  out.tolerance = tolerance;
  out.trials = trials;
  out.seed = seed;

  const double outage_at_max = probe(rate_max);
  if (outage_at_max <= target_outage) {
    out.rate_bpcu = rate_max;
    out.outage_at_rate = outage_at_max;
    return out;
  }
  const double outage_at_min = probe(rate_min);
  if (outage_at_min > target_outage)
    throw BracketError(rate_min, rate_max, outage_at_min, outage_at_max,
                       target_outage);

  double lo = rate_min;
  double hi = rate_max;
  double outage_at_lo = outage_at_min;
  while (hi - lo > tolerance) {
    const double mid = 0.5 * (lo + hi);
    const double outage_at_mid = probe(mid);
    if (outage_at_mid <= target_outage) {
      lo = mid;
      outage_at_lo = outage_at_mid;
    } else {
      hi = mid;
    }
  }
  out.rate_bpcu = lo;
  out.outage_at_rate = outage_at_lo;
  return out;
}

OutageBoundReport run_bound_validation(const SweepSpec& spec) {
  SweepSpec forced = spec;
  forced.config.relay_behavior = RelayBehavior::GenieAided;
  forced.schemes = {Scheme::CooperativeNoma};
  forced.validate();

  const OutageEstimate sim = run_outage_sweep(forced);
  const int num_users = forced.config.num_users;
  const std::size_t num_points = forced.snr_db.size();

  OutageBoundReport report;
  report.snr_db = forced.snr_db;
  report.num_users = num_users;
  report.trials = forced.trials;
  const std::vector<double> zeros(static_cast<std::size_t>(num_users), 0.0);
  report.bound_exact.assign(num_points, zeros);
  report.bound_high_snr.assign(num_points, zeros);
  report.simulated.assign(num_points, zeros);
  report.simulated_halfwidth.assign(num_points, zeros);
  report.violation.assign(
      num_points,
      std::vector<bool>(static_cast<std::size_t>(num_users), false));
  report.overall_from_bounds.assign(num_points, 0.0);

  for (std::size_t p = 0; p < num_points; ++p) {
    SystemConfig point_config = forced.config;
    point_config.transmit_snr = db_to_linear(forced.snr_db[p]);
    std::vector<double> exact(static_cast<std::size_t>(num_users), 0.0);
    for (int user = 1; user <= num_users; ++user) {
      const std::size_t u = static_cast<std::size_t>(user) - 1;
      exact[u] = outage_union_bound(point_config, user, BoundMode::ExactFactors);
      double high_snr;
      try {
        high_snr = outage_union_bound(point_config, user, BoundMode::HighSnr);
      } catch (const OutageFloorError&) {
        high_snr = std::numeric_limits<double>::quiet_NaN();
      }
      const CellEstimate& cell = sim.at(0, p).per_user[u];
      report.bound_exact[p][u] = exact[u];
      report.bound_high_snr[p][u] = high_snr;
      report.simulated[p][u] = cell.outage;
      report.simulated_halfwidth[p][u] = cell.ci_halfwidth;
      const double se = proportion_se(cell.outage, cell.trials);
      report.violation[p][u] = cell.outage - 3.0 * se > exact[u];
    }
    report.overall_from_bounds[p] = overall_outage(exact);
  }
  return report;
}

}  // namespace coopnoma
