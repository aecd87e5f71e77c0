#pragma once

#include <string>
#include <vector>

#include "coopnoma/montecarlo.hpp"
#include "coopnoma/pairing.hpp"

namespace coopnoma {

// Inclusive SNR grid in dB. start > stop yields an empty grid, which the CLI
// turns into a header-only CSV.
struct GridSpec {
  double start_db = 0.0;
  double stop_db = 40.0;
  double step_db = 5.0;

  std::vector<double> points() const;  // throws if step_db <= 0
};

struct CapacityParams {
  double target_outage = 0.1;
  double rate_min = 0.05;  // BPCU, bisection bracket
  double rate_max = 8.0;
  double tolerance = 0.01;
};

struct PairingParams {
  double partner_power = 0.8;  // p_m^2 given to the weak partner
  double rho_db = 40.0;
};

// Everything a CLI run needs, parsed from a flat key-value file. Unknown keys
// are rejected; per-user arrays (rate.k, power.k, relay.j.m) must be complete
// when overridden; `render_experiment_file` emits every field explicitly and
// round-trips through the parser.
struct ExperimentFile {
  SystemConfig config;  // config.transmit_snr is unused; grids supply SNR
  GridSpec grid;
  long trials = 100000;
  std::uint64_t seed = 12345;
  int threads = 0;
  std::vector<Scheme> schemes;  // defaults to all three, name order
  CapacityParams capacity;
  PairingParams pairing;

  static ExperimentFile defaults(int num_users = 2);
  SweepSpec sweep_spec() const;
};

// Parse failure with a 1-based line number (0 for file-level problems such as
// an incomplete per-user array). what() includes the line and key.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message);
  int line;
};

ExperimentFile parse_experiment_text(const std::string& text);
std::string render_experiment_file(const ExperimentFile& file);

// CSV renderers. Columns and row order are fixed; numbers are written with
// std::to_chars at fixed precision, so output is byte-stable across runs,
// thread counts, platforms, and locales.
std::string outage_csv(const OutageEstimate& estimate);
std::string capacity_csv(const std::vector<CapacityEstimate>& rows);
std::string pairing_csv(const PairingReport& report, double rho_db);

// Header-only variants for empty grids.
std::string outage_csv_header();
std::string capacity_csv_header();
std::string pairing_csv_header();

}  // namespace coopnoma
