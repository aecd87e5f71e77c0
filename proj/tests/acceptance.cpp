// Acceptance gate for the cooperative-NOMA toolkit. Each criterion is a
// self-contained scenario with its parameters and tolerances pinned below;
// running the binary with no arguments exercises all nine and prints exactly
// one PASS/FAIL line per criterion, while --criterion N runs a single one.
// The exit status is 0 only if every executed criterion passed.

#include <algorithm>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "coopnoma/channel.hpp"
#include "coopnoma/cli.hpp"
#include "coopnoma/config.hpp"
#include "coopnoma/montecarlo.hpp"
#include "coopnoma/outage.hpp"
#include "coopnoma/pairing.hpp"
#include "coopnoma/protocol.hpp"
#include "coopnoma/rng.hpp"
#include "coopnoma/stats.hpp"

using namespace coopnoma;

namespace {

struct Result {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* format, ...) {
  char buffer[512];
  va_list args;
  va_start(args, format);
  std::vsnprintf(buffer, sizeof(buffer), format, args);
  va_end(args);
  return buffer;
}

// --------------------------------------------------------------- criterion 1
// The simulated cooperative scheme must show a log-log outage slope close to
// the full diversity order K = 2 for both users, while the non-cooperative
// baseline's weak user stays near slope 1.
Result criterion1() {
  constexpr double kCoopLo = 1.7, kCoopHi = 2.3;
  constexpr double kDirectLo = 0.8, kDirectHi = 1.2;

  SweepSpec spec;
  spec.config = SystemConfig::defaults(2);
  spec.config.target_rates = {2.0, 1.0};
  spec.config.inter_user_gain_mean = 0.1;  // weak relay link, measurable outage
  spec.config.relay_behavior = RelayBehavior::GenieAided;
  spec.snr_db = {30.0, 32.5, 35.0, 37.5, 40.0};
  spec.trials = 10'000'000;
  spec.seed = 12345;
  spec.schemes = {Scheme::CooperativeNoma, Scheme::NonCooperativeNoma};
  OutageEstimate est = run_outage_sweep(spec);

  auto user_curve = [&](std::size_t scheme, int user) {
    std::vector<double> out;
    for (std::size_t p = 0; p < spec.snr_db.size(); ++p) {
      out.push_back(est.at(scheme, p).per_user[user - 1].outage);
    }
    return out;
  };
  double coop1 = diversity_slope(spec.snr_db, user_curve(0, 1));
  double coop2 = diversity_slope(spec.snr_db, user_curve(0, 2));
  double direct1 = diversity_slope(spec.snr_db, user_curve(1, 1));

  bool pass = coop1 >= kCoopLo && coop1 <= kCoopHi && coop2 >= kCoopLo &&
              coop2 <= kCoopHi && direct1 >= kDirectLo && direct1 <= kDirectHi;
  return {pass,
          fmt("cooperative outage slopes %.3f and %.3f over 30-40 dB (band "
              "[%.1f, %.1f]); non-cooperative weak-user slope %.3f (band "
              "[%.1f, %.1f])",
              coop1, coop2, kCoopLo, kCoopHi, direct1, kDirectLo, kDirectHi)};
}

// --------------------------------------------------------------- criterion 2
// Under the default two-user scenario the overall outage curves must order
// cooperative < non-cooperative < orthogonal at every grid point from 20 dB
// up, with each gap exceeding three combined standard errors.
Result criterion2() {
  constexpr double kMinSeparationSe = 3.0;
  constexpr double kFromDb = 20.0;

  SweepSpec spec;
  spec.config = SystemConfig::defaults(2);
  spec.snr_db = {0, 5, 10, 15, 20, 25, 30, 35, 40};
  spec.trials = 4'000'000;
  spec.seed = 12345;
  spec.schemes = {Scheme::CooperativeNoma, Scheme::NonCooperativeNoma,
                  Scheme::OrthogonalMA};
  OutageEstimate est = run_outage_sweep(spec);

  double min_ratio = 1e300;
  bool ordered = true;
  for (std::size_t p = 0; p < spec.snr_db.size(); ++p) {
    if (spec.snr_db[p] < kFromDb) continue;
    double coop = est.at(0, p).overall.outage;
    double direct = est.at(1, p).overall.outage;
    double oma = est.at(2, p).overall.outage;
    ordered = ordered && coop < direct && direct < oma;
    double se_coop = proportion_se(coop, spec.trials);
    double se_direct = proportion_se(direct, spec.trials);
    double se_oma = proportion_se(oma, spec.trials);
    double r1 = (direct - coop) / std::hypot(se_coop, se_direct);
    double r2 = (oma - direct) / std::hypot(se_direct, se_oma);
    min_ratio = std::min({min_ratio, r1, r2});
  }
  bool pass = ordered && min_ratio >= kMinSeparationSe;
  return {pass,
          fmt("overall outage from %.0f dB orders cooperative < "
              "non-cooperative < orthogonal with min gap %.1f combined "
              "standard errors (needs %.0f)",
              kFromDb, min_ratio, kMinSeparationSe)};
}

// --------------------------------------------------------------- criterion 3
// Outage-constrained common rates at 15 dB (10% target) must land in the
// expected windows for all three schemes.
Result criterion3() {
  constexpr double kCoopMid = 1.70, kCoopTol = 0.25;
  constexpr double kDirectMid = 0.95, kDirectTol = 0.15;
  constexpr double kOmaMid = 0.70, kOmaTol = 0.15;
  constexpr long kTrials = 1'000'000;

  SystemConfig config = SystemConfig::defaults(2);
  auto search = [&](Scheme scheme) {
    return run_capacity_search(config, scheme, 15.0, 0.1, 0.05, 8.0, 0.01,
                               kTrials, 12345);
  };
  double coop = search(Scheme::CooperativeNoma).rate_bpcu;
  double direct = search(Scheme::NonCooperativeNoma).rate_bpcu;
  double oma = search(Scheme::OrthogonalMA).rate_bpcu;

  bool pass = std::abs(coop - kCoopMid) <= kCoopTol &&
              std::abs(direct - kDirectMid) <= kDirectTol &&
              std::abs(oma - kOmaMid) <= kOmaTol;
  return {pass,
          fmt("10%%-outage common rates at 15 dB: cooperative %.3f (%.2f+-"
              "%.2f), non-cooperative %.3f (%.2f+-%.2f), orthogonal %.3f "
              "(%.2f+-%.2f) bits per channel use",
              coop, kCoopMid, kCoopTol, direct, kDirectMid, kDirectTol, oma,
              kOmaMid, kOmaTol)};
}

// --------------------------------------------------------------- criterion 4
// The closed-form SINR-term law must match simulation: for several (a, b,
// rho) shapes, the empirical distribution of a g/(b g + 1/rho) over a million
// exponential draws stays within KS distance 0.005 of z_cdf.
Result criterion4() {
  constexpr double kKsLimit = 0.005;
  constexpr long kSamples = 1'000'000;
  const struct { double a, b, rho; } cases[] = {
      {1.0, 0.0, 100.0},        {0.8, 0.2, 10.0},  {0.2, 0.0, 1000.0},
      {0.5, 0.5, 31.6227766},   {0.25, 0.05, 3.1622766},
  };

  double worst = 0.0;
  int idx = 0;
  for (const auto& c : cases) {
    Rng rng(static_cast<std::uint64_t>(2026 + idx));
    std::vector<double> samples;
    samples.reserve(kSamples);
    for (long i = 0; i < kSamples; ++i) {
      double g = rng.next_exponential(1.0);
      samples.push_back(c.a * g / (c.b * g + 1.0 / c.rho));
    }
    ZSpec spec{c.a, c.b, c.rho, 1};
    double d = ks_statistic(std::move(samples),
                            [&](double z) { return z_cdf(spec, z); });
    worst = std::max(worst, d);
    ++idx;
  }
  return {worst <= kKsLimit,
          fmt("max KS distance %.5f across 5 (a, b, rho) shapes at %ld "
              "samples each (limit %.3f)",
              worst, kSamples, kKsLimit)};
}

// --------------------------------------------------------------- criterion 5
// At 60 dB the leading-term closed form must agree with the exact law to 1%
// relative error, including the residual-interference (b > 0) cases.
Result criterion5() {
  constexpr double kRelTol = 0.01;
  const ZSpec cases[] = {
      {0.8, 0.2, 1e6, 1},  // interference-limited shape, first order
      {0.8, 0.2, 1e6, 2},  // same shape against the second-order law
      {0.5, 0.0, 1e6, 1},  // interference-free control
  };
  const double eps[] = {1.0, 1.0, 0.25};

  double worst = 0.0;
  for (int i = 0; i < 3; ++i) {
    double exact = z_cdf(cases[i], eps[i]);
    double approx = z_cdf_high_snr(cases[i], eps[i]);
    worst = std::max(worst, std::abs(approx - exact) / exact);
  }
  return {worst <= kRelTol,
          fmt("high-SNR closed form within %.2e relative error of the exact "
              "law at 60 dB over 3 parameter shapes (limit %.0f%%)",
              worst, kRelTol * 100.0)};
}

// --------------------------------------------------------------- criterion 6
// The analytical per-user bound must lie on or above the genie-aided
// simulated outage (three standard errors of slack) at every grid cell for
// both a two-user and a three-user scenario.
Result criterion6() {
  auto run_case = [](int users, long trials, double& worst_excess) {
    SweepSpec spec;
    spec.config = SystemConfig::defaults(users);
    spec.snr_db = {0, 5, 10, 15, 20, 25, 30, 35, 40};
    spec.trials = trials;
    spec.seed = 777;
    OutageBoundReport report = run_bound_validation(spec);
    bool ok = true;
    for (std::size_t p = 0; p < report.snr_db.size(); ++p) {
      for (int u = 0; u < users; ++u) {
        if (report.violation[p][u]) ok = false;
        double se = proportion_se(report.simulated[p][u], trials);
        if (se > 0.0) {
          worst_excess = std::max(
              worst_excess,
              (report.simulated[p][u] - report.bound_exact[p][u]) / se);
        }
      }
    }
    return ok;
  };

  double worst = -1e300;
  bool two = run_case(2, 4'000'000, worst);
  bool three = run_case(3, 2'000'000, worst);
  return {two && three,
          fmt("genie-aided simulation never exceeds the analytical bound "
              "(3 SE slack) over 9 points x {2, 3} users; worst "
              "(sim - bound) = %.2f SE",
              worst)};
}

// --------------------------------------------------------------- criterion 7
// Pairing the best user with a weaker partner must grow the mean sum-rate
// gap monotonically, match the half-log-gain-ratio prediction within 0.2
// bits at 40 dB, and become insensitive to the power split at 60 dB.
Result criterion7() {
  constexpr double kPredictionTol = 0.2;
  constexpr double kSplitTol = 0.05;

  PairingReport base = pairing_study(10, 1e4, 0.8, 100'000, 12345);
  bool decreasing = true;
  double worst_pred = 0.0;
  for (std::size_t i = 0; i < base.candidates.size(); ++i) {
    if (i > 0 && base.candidates[i].mean_gap_exact >=
                     base.candidates[i - 1].mean_gap_exact) {
      decreasing = false;
    }
    worst_pred = std::max(worst_pred,
                          std::abs(base.candidates[i].mean_gap_exact -
                                   base.candidates[i].mean_gap_predicted));
  }

  double worst_split = 0.0;
  PairingReport ref = pairing_study(10, 1e6, 0.8, 100'000, 12345);
  for (double p : {0.6, 0.9}) {
    PairingReport alt = pairing_study(10, 1e6, p, 100'000, 12345);
    for (std::size_t i = 0; i < ref.candidates.size(); ++i) {
      worst_split = std::max(worst_split,
                             std::abs(alt.candidates[i].mean_gap_exact -
                                      ref.candidates[i].mean_gap_exact));
    }
  }

  bool pass = decreasing && worst_pred <= kPredictionTol &&
              worst_split <= kSplitTol;
  return {pass,
          fmt("mean sum-rate gap falls from the weakest partner up; "
              "prediction error <= %.4f bits at 40 dB (limit %.1f); power-"
              "split sensitivity <= %.4f bits at 60 dB (limit %.2f)",
              worst_pred, kPredictionTol, worst_split, kSplitTol)};
}

// --------------------------------------------------------------- criterion 8
// When cooperation spends channel uses in band (softened per-message
// thresholds), the cooperative scheme must still beat both baselines on
// overall outage at every point from 25 dB up.
Result criterion8() {
  SweepSpec spec;
  spec.config = SystemConfig::defaults(2);
  spec.config.target_rates = {1.2, 1.9};
  spec.config.cooperation_mode = CooperationMode::InBand;
  spec.snr_db = {25.0, 30.0, 35.0, 40.0};
  spec.trials = 2'000'000;
  spec.seed = 12345;
  spec.schemes = {Scheme::CooperativeNoma, Scheme::NonCooperativeNoma,
                  Scheme::OrthogonalMA};
  OutageEstimate est = run_outage_sweep(spec);

  bool pass = true;
  double worst_margin = 1e300;
  for (std::size_t p = 0; p < spec.snr_db.size(); ++p) {
    double coop = est.at(0, p).overall.outage;
    double direct = est.at(1, p).overall.outage;
    double oma = est.at(2, p).overall.outage;
    if (!(coop < direct && coop < oma)) pass = false;
    worst_margin = std::min(worst_margin, std::min(direct, oma) - coop);
  }
  return {pass,
          fmt("in-band cooperative overall outage below both baselines at "
              "25-40 dB (smallest margin %.2e)",
              worst_margin)};
}

// --------------------------------------------------------------- criterion 9
// The command-line sweep must write byte-identical CSV files whichever
// thread count runs it.
Result criterion9() {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path();
  std::vector<std::string> contents;
  for (int threads : {1, 4, 8}) {
    fs::path out = dir / ("coopnoma_accept9_" + std::to_string(threads) + ".csv");
    std::ostringstream sink_out, sink_err;
    int code = run_cli({"outage-sweep", "--out", out.string(), "--trials",
                        "100000", "--threads", std::to_string(threads)},
                       sink_out, sink_err);
    if (code != 0) {
      return {false, fmt("outage-sweep with %d threads exited with status %d",
                         threads, code)};
    }
    std::ifstream stream(out, std::ios::binary);
    std::ostringstream buffer;
    buffer << stream.rdbuf();
    contents.push_back(buffer.str());
    fs::remove(out);
  }
  long rows = std::count(contents[0].begin(), contents[0].end(), '\n') - 1;
  bool pass = rows == 54 && contents[0] == contents[1] &&
              contents[1] == contents[2];
  return {pass,
          fmt("outage CSV (%zu bytes, %ld data rows) byte-identical across "
              "--threads 1/4/8",
              contents[0].size(), rows)};
}

using CriterionFn = Result (*)();
constexpr CriterionFn kCriteria[] = {criterion1, criterion2, criterion3,
                                     criterion4, criterion5, criterion6,
                                     criterion7, criterion8, criterion9};

}  // namespace

int main(int argc, char** argv) {
  int which = 0;  // 0 = run all
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) {
      which = std::atoi(argv[i + 1]);
      ++i;
    } else {
      std::fprintf(stderr, "usage: %s [--criterion N]\n", argv[0]);
      return 2;
    }
  }
  if (which < 0 || which > 9) {
    std::fprintf(stderr, "criterion number must lie in 1..9\n");
    return 2;
  }

  bool all_pass = true;
  for (int n = 1; n <= 9; ++n) {
    if (which != 0 && n != which) continue;
    Result r;
    try {
      r = kCriteria[n - 1]();
    } catch (const std::exception& e) {
      r = {false, std::string("unexpected exception: ") + e.what()};
    }
    std::printf("%s criterion %d: %s\n", r.pass ? "PASS" : "FAIL", n,
                r.detail.c_str());
    std::fflush(stdout);
    all_pass = all_pass && r.pass;
  }
  return all_pass ? 0 : 1;
}
