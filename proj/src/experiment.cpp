#include "coopnoma/experiment.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <map>
#include <sstream>

namespace coopnoma {

std::vector<double> GridSpec::points() const {
  if (!(step_db > 0.0))
    throw std::invalid_argument("snr_db.step must be positive");
  std::vector<double> out;
  if (start_db > stop_db) return out;
  // Compute each point by multiplication, not accumulation, so the grid is
  // exactly reproducible and the endpoint is not lost to rounding.
  const double span = (stop_db - start_db) / step_db;
  const long count = static_cast<long>(std::floor(span + 1e-9)) + 1;
  out.reserve(static_cast<std::size_t>(count));
  for (long i = 0; i < count; ++i)
    out.push_back(start_db + static_cast<double>(i) * step_db);
  return out;
}

ExperimentFile ExperimentFile::defaults(int num_users) {
  ExperimentFile file;
  file.config = SystemConfig::defaults(num_users);
  file.schemes = {Scheme::CooperativeNoma, Scheme::NonCooperativeNoma,
                  Scheme::OrthogonalMA};
  return file;
}

SweepSpec ExperimentFile::sweep_spec() const {
  SweepSpec spec;
  spec.config = config;
  spec.snr_db = grid.points();
  spec.trials = trials;
  spec.seed = seed;
  spec.schemes = schemes;
  spec.threads = threads;
  return spec;
}

ParseError::ParseError(int line_in, const std::string& message)
    : std::runtime_error(line_in > 0
                             ? "line " + std::to_string(line_in) + ": " + message
                             : message),
      line(line_in) {}

namespace {

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

struct Entry {
  int line = 0;
  std::string key;
  std::string value;
};

double parse_double(const Entry& entry) {
  double out = 0.0;
  const char* begin = entry.value.data();
  const char* end = begin + entry.value.size();
  auto [ptr, ec] = std::from_chars(begin, end, out);
  if (ec != std::errc() || ptr != end)
    throw ParseError(entry.line, "invalid number for key '" + entry.key +
                                     "': '" + entry.value + "'");
  return out;
}

long parse_long(const Entry& entry) {
  long out = 0;
  const char* begin = entry.value.data();
  const char* end = begin + entry.value.size();
  auto [ptr, ec] = std::from_chars(begin, end, out);
  if (ec != std::errc() || ptr != end)
    throw ParseError(entry.line, "invalid integer for key '" + entry.key +
                                     "': '" + entry.value + "'");
  return out;
}

std::uint64_t parse_u64(const Entry& entry) {
  std::uint64_t out = 0;
  const char* begin = entry.value.data();
  const char* end = begin + entry.value.size();
  auto [ptr, ec] = std::from_chars(begin, end, out);
  if (ec != std::errc() || ptr != end)
    throw ParseError(entry.line, "invalid unsigned integer for key '" +
                                     entry.key + "': '" + entry.value + "'");
  return out;
}

// Parses a 1-based index suffix such as the "3" of "rate.3".
bool parse_index(const std::string& text, int& out) {
  if (text.empty()) return false;
  int value = 0;
  const char* begin = text.data();
  const char* end = begin + text.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end || value < 1) return false;
  out = value;
  return true;
}

bool split_dotted(const std::string& key, const std::string& prefix,
                  std::vector<std::string>& parts) {
  if (key.size() <= prefix.size() || key.compare(0, prefix.size(), prefix) != 0)
    return false;
  if (key[prefix.size()] != '.') return false;
  parts.clear();
  std::size_t pos = prefix.size() + 1;
  while (true) {
    std::size_t dot = key.find('.', pos);
    if (dot == std::string::npos) {
      parts.push_back(key.substr(pos));
      return true;
    }
    parts.push_back(key.substr(pos, dot - pos));
    pos = dot + 1;
  }
}

std::vector<Scheme> parse_schemes(const Entry& entry) {
  std::vector<Scheme> out;
  std::stringstream stream(entry.value);
  std::string token;
  while (std::getline(stream, token, ',')) {
    const std::string name = trim(token);
    Scheme scheme;
    if (!scheme_from_name(name, scheme))
      throw ParseError(entry.line, "unknown scheme '" + name + "'");
    if (std::find(out.begin(), out.end(), scheme) != out.end())
      throw ParseError(entry.line, "scheme '" + name + "' listed twice");
    out.push_back(scheme);
  }
  if (out.empty())
    throw ParseError(entry.line, "schemes list must not be empty");
  return out;
}

}  // namespace

ExperimentFile parse_experiment_text(const std::string& text) {
  // Tokenize: one "key = value" per line, '#' starts a comment.
  std::vector<Entry> entries;
  {
    std::map<std::string, int> seen;
    std::stringstream stream(text);
    std::string raw;
    int line = 0;
    while (std::getline(stream, raw)) {
      ++line;
      const std::size_t hash = raw.find('#');
      if (hash != std::string::npos) raw.erase(hash);
      const std::string stripped = trim(raw);
      if (stripped.empty()) continue;
      const std::size_t eq = stripped.find('=');
      if (eq == std::string::npos)
        throw ParseError(line, "expected 'key = value', got '" + stripped + "'");
      Entry entry;
      entry.line = line;
      entry.key = trim(stripped.substr(0, eq));
      entry.value = trim(stripped.substr(eq + 1));
      if (entry.key.empty()) throw ParseError(line, "missing key before '='");
      if (entry.value.empty())
        throw ParseError(line, "missing value for key '" + entry.key + "'");
      auto [it, inserted] = seen.emplace(entry.key, line);
      if (!inserted)
        throw ParseError(line, "duplicate key '" + entry.key +
                                   "' (first set on line " +
                                   std::to_string(it->second) + ")");
      entries.push_back(std::move(entry));
    }
  }

  // num_users first: array sizes and defaults depend on it.
  int num_users = 2;
  for (const Entry& entry : entries) {
    if (entry.key == "num_users") {
      const long value = parse_long(entry);
      if (value < 1 || value > 64)
        throw ParseError(entry.line, "num_users must lie in [1, 64]");
      num_users = static_cast<int>(value);
    }
  }

  ExperimentFile file = ExperimentFile::defaults(num_users);
  std::map<int, Entry> rate_entries;     // k -> entry
  std::map<int, Entry> power_entries;    // k -> entry
  std::map<std::pair<int, int>, Entry> relay_entries;  // (j, m) -> entry

  for (const Entry& entry : entries) {
    std::vector<std::string> parts;
    if (entry.key == "num_users") {
      continue;  // handled above
    } else if (entry.key == "seed") {
      file.seed = parse_u64(entry);
    } else if (entry.key == "trials") {
      file.trials = parse_long(entry);
      if (file.trials < 1)
        throw ParseError(entry.line, "trials must be at least 1");
    } else if (entry.key == "threads") {
      const long value = parse_long(entry);
      if (value < 0 || value > 1024)
        throw ParseError(entry.line, "threads must lie in [0, 1024]");
      file.threads = static_cast<int>(value);
    } else if (entry.key == "snr_db.start") {
      file.grid.start_db = parse_double(entry);
    } else if (entry.key == "snr_db.stop") {
      file.grid.stop_db = parse_double(entry);
    } else if (entry.key == "snr_db.step") {
      file.grid.step_db = parse_double(entry);
      if (!(file.grid.step_db > 0.0))
        throw ParseError(entry.line, "snr_db.step must be positive");
    } else if (entry.key == "inter_user_gain_mean") {
      file.config.inter_user_gain_mean = parse_double(entry);
      if (!(file.config.inter_user_gain_mean > 0.0))
        throw ParseError(entry.line, "inter_user_gain_mean must be positive");
    } else if (entry.key == "cooperation_mode") {
      if (entry.value == "short_range") {
        file.config.cooperation_mode = CooperationMode::ShortRange;
      } else if (entry.value == "in_band") {
        file.config.cooperation_mode = CooperationMode::InBand;
      } else {
        throw ParseError(entry.line, "cooperation_mode must be 'short_range' "
                                     "or 'in_band', got '" + entry.value + "'");
      }
    } else if (entry.key == "relay_behavior") {
      if (entry.value == "decode_and_forward") {
        file.config.relay_behavior = RelayBehavior::DecodeAndForward;
      } else if (entry.value == "genie_aided") {
        file.config.relay_behavior = RelayBehavior::GenieAided;
      } else {
        throw ParseError(entry.line,
                         "relay_behavior must be 'decode_and_forward' or "
                         "'genie_aided', got '" + entry.value + "'");
      }
    } else if (entry.key == "schemes") {
      file.schemes = parse_schemes(entry);
    } else if (entry.key == "capacity.target_outage") {
      file.capacity.target_outage = parse_double(entry);
      if (!(file.capacity.target_outage > 0.0) ||
          file.capacity.target_outage > 1.0)
        throw ParseError(entry.line,
                         "capacity.target_outage must lie in (0, 1]");
    } else if (entry.key == "capacity.rate_min") {
      file.capacity.rate_min = parse_double(entry);
    } else if (entry.key == "capacity.rate_max") {
      file.capacity.rate_max = parse_double(entry);
    } else if (entry.key == "capacity.tolerance") {
      file.capacity.tolerance = parse_double(entry);
      if (!(file.capacity.tolerance > 0.0))
        throw ParseError(entry.line, "capacity.tolerance must be positive");
    } else if (entry.key == "pairing.partner_power") {
      file.pairing.partner_power = parse_double(entry);
      if (file.pairing.partner_power < 0.5 || file.pairing.partner_power > 1.0)
        throw ParseError(entry.line,
                         "pairing.partner_power must lie in [0.5, 1]");
    } else if (entry.key == "pairing.rho_db") {
      file.pairing.rho_db = parse_double(entry);
    } else if (split_dotted(entry.key, "rate", parts)) {
      int k = 0;
      if (parts.size() != 1 || !parse_index(parts[0], k))
        throw ParseError(entry.line, "unknown key '" + entry.key + "'");
      if (k > num_users)
        throw ParseError(entry.line, "rate." + std::to_string(k) +
                                         " is out of range for num_users = " +
                                         std::to_string(num_users));
      rate_entries.emplace(k, entry);
    } else if (split_dotted(entry.key, "power", parts)) {
      int k = 0;
      if (parts.size() != 1 || !parse_index(parts[0], k))
        throw ParseError(entry.line, "unknown key '" + entry.key + "'");
      if (k > num_users)
        throw ParseError(entry.line, "power." + std::to_string(k) +
                                         " is out of range for num_users = " +
                                         std::to_string(num_users));
      power_entries.emplace(k, entry);
    } else if (split_dotted(entry.key, "relay", parts)) {
      int j = 0;
      int m = 0;
      if (parts.size() != 2 || !parse_index(parts[0], j) ||
          !parse_index(parts[1], m))
        throw ParseError(entry.line, "unknown key '" + entry.key + "'");
      if (j < 2 || j > num_users || m >= j)
        throw ParseError(entry.line,
                         "relay." + std::to_string(j) + "." +
                             std::to_string(m) +
                             " is out of range for num_users = " +
                             std::to_string(num_users));
      relay_entries.emplace(std::make_pair(j, m), entry);
    } else {
      throw ParseError(entry.line, "unknown key '" + entry.key + "'");
    }
  }

  // Per-user arrays are all-or-nothing so a partial override cannot silently
  // mix file values with defaults.
  if (!rate_entries.empty()) {
    for (int k = 1; k <= num_users; ++k) {
      auto it = rate_entries.find(k);
      if (it == rate_entries.end())
        throw ParseError(rate_entries.begin()->second.line,
                         "rate." + std::to_string(k) +
                             " is missing: rate.* must be given for every "
                             "user once any rate is overridden");
      file.config.target_rates[static_cast<std::size_t>(k) - 1] =
          parse_double(it->second);
    }
  }
  if (!power_entries.empty()) {
    for (int k = 1; k <= num_users; ++k) {
      auto it = power_entries.find(k);
      if (it == power_entries.end())
        throw ParseError(power_entries.begin()->second.line,
                         "power." + std::to_string(k) +
                             " is missing: power.* must be given for every "
                             "user once any power is overridden");
      file.config.power_alloc[static_cast<std::size_t>(k) - 1] =
          parse_double(it->second);
    }
  }
  if (!relay_entries.empty()) {
    for (int j = 2; j <= num_users; ++j) {
      for (int m = 1; m < j; ++m) {
        auto it = relay_entries.find(std::make_pair(j, m));
        if (it == relay_entries.end())
          throw ParseError(relay_entries.begin()->second.line,
                           "relay." + std::to_string(j) + "." +
                               std::to_string(m) +
                               " is missing: relay.*.* must be given for "
                               "every slot once any entry is overridden");
        file.config.relay_alloc[static_cast<std::size_t>(j) - 2]
                               [static_cast<std::size_t>(m) - 1] =
            parse_double(it->second);
      }
    }
  }

  if (!(file.capacity.rate_min > 0.0) ||
      !(file.capacity.rate_max > file.capacity.rate_min))
    throw ParseError(0, "capacity rate bracket must satisfy 0 < rate_min < "
                        "rate_max");
  try {
    file.config.validate();
  } catch (const std::invalid_argument& e) {
    throw ParseError(0, std::string("invalid configuration: ") + e.what());
  }
  return file;
}

namespace {

// Shortest representation that round-trips, for config rendering.
std::string format_roundtrip(double value) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  (void)ec;
  return std::string(buf, ptr);
}

// Fixed-precision decimal for CSV cells.
std::string format_fixed(double value, int precision) {
  if (std::isnan(value)) return "nan";
  char buf[512];
  auto [ptr, ec] =
      std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::fixed,
                    precision);
  (void)ec;
  return std::string(buf, ptr);
}

}  // namespace

std::string render_experiment_file(const ExperimentFile& file) {
  std::string out;
  auto emit = [&out](const std::string& key, const std::string& value) {
    out += key;
    out += " = ";
    out += value;
    out += '\n';
  };
  emit("num_users", std::to_string(file.config.num_users));
  emit("seed", std::to_string(file.seed));
  emit("trials", std::to_string(file.trials));
  emit("threads", std::to_string(file.threads));
  emit("snr_db.start", format_roundtrip(file.grid.start_db));
  emit("snr_db.stop", format_roundtrip(file.grid.stop_db));
  emit("snr_db.step", format_roundtrip(file.grid.step_db));
  emit("inter_user_gain_mean",
       format_roundtrip(file.config.inter_user_gain_mean));
  emit("cooperation_mode", to_string(file.config.cooperation_mode));
  emit("relay_behavior", to_string(file.config.relay_behavior));
  {
    std::string joined;
    for (std::size_t i = 0; i < file.schemes.size(); ++i) {
      if (i > 0) joined += ',';
      joined += scheme_name(file.schemes[i]);
    }
    emit("schemes", joined);
  }
  for (int k = 1; k <= file.config.num_users; ++k)
    emit("rate." + std::to_string(k),
         format_roundtrip(
             file.config.target_rates[static_cast<std::size_t>(k) - 1]));
  for (int k = 1; k <= file.config.num_users; ++k)
    emit("power." + std::to_string(k),
         format_roundtrip(
             file.config.power_alloc[static_cast<std::size_t>(k) - 1]));
  for (int j = 2; j <= file.config.num_users; ++j)
    for (int m = 1; m < j; ++m)
      emit("relay." + std::to_string(j) + "." + std::to_string(m),
           format_roundtrip(
               file.config.relay_alloc[static_cast<std::size_t>(j) - 2]
                                      [static_cast<std::size_t>(m) - 1]));
  emit("capacity.target_outage", format_roundtrip(file.capacity.target_outage));
  emit("capacity.rate_min", format_roundtrip(file.capacity.rate_min));
  emit("capacity.rate_max", format_roundtrip(file.capacity.rate_max));
  emit("capacity.tolerance", format_roundtrip(file.capacity.tolerance));
  emit("pairing.partner_power",
       format_roundtrip(file.pairing.partner_power));
  emit("pairing.rho_db", format_roundtrip(file.pairing.rho_db));
  return out;
}

std::string outage_csv_header() {
  return "scheme,snr_db,user_index,outage,ci_halfwidth,trials,seed\n";
}

std::string capacity_csv_header() {
  return "scheme,snr_db,capacity_bpcu,target_outage,tolerance\n";
}

std::string pairing_csv_header() {
  return "partner_index,mean_gap_exact,mean_gap_predicted,trials,rho_db\n";
}

std::string outage_csv(const OutageEstimate& estimate) {
  // Rows sorted by (scheme name, snr_db, user_index); the grid is ascending
  // already, so only the scheme dimension needs ordering.
  std::vector<std::size_t> scheme_order(estimate.schemes.size());
  for (std::size_t i = 0; i < scheme_order.size(); ++i) scheme_order[i] = i;
  std::sort(scheme_order.begin(), scheme_order.end(),
            [&](std::size_t a, std::size_t b) {
              return std::string(scheme_name(estimate.schemes[a])) <
                     scheme_name(estimate.schemes[b]);
            });

  std::string out = outage_csv_header();
  for (std::size_t s : scheme_order) {
    const char* name = scheme_name(estimate.schemes[s]);
    for (std::size_t p = 0; p < estimate.snr_db.size(); ++p) {
      const SchemePointEstimate& point = estimate.points[s][p];
      for (int k = 1; k <= estimate.num_users; ++k) {
        const CellEstimate& cell =
            point.per_user[static_cast<std::size_t>(k) - 1];
        out += name;
        out += ',';
        out += format_fixed(estimate.snr_db[p], 2);
        out += ',';
        out += std::to_string(k);
        out += ',';
        out += format_fixed(cell.outage, 9);
        out += ',';
        out += format_fixed(cell.ci_halfwidth, 9);
        out += ',';
        out += std::to_string(cell.trials);
        out += ',';
        out += std::to_string(estimate.seed);
        out += '\n';
      }
    }
  }
  return out;
}

std::string capacity_csv(const std::vector<CapacityEstimate>& rows) {
  std::vector<std::size_t> order(rows.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const std::string name_a = scheme_name(rows[a].scheme);
    const std::string name_b = scheme_name(rows[b].scheme);
    if (name_a != name_b) return name_a < name_b;
    return rows[a].snr_db < rows[b].snr_db;
  });
  std::string out = capacity_csv_header();
  for (std::size_t i : order) {
    const CapacityEstimate& row = rows[i];
    out += scheme_name(row.scheme);
    out += ',';
    out += format_fixed(row.snr_db, 2);
    out += ',';
    out += format_fixed(row.rate_bpcu, 4);
    out += ',';
    out += format_fixed(row.target_outage, 6);
    out += ',';
    out += format_fixed(row.tolerance, 6);
    out += '\n';
  }
  return out;
}

std::string pairing_csv(const PairingReport& report, double rho_db) {
  std::string out = pairing_csv_header();
  for (const PairingCandidate& candidate : report.candidates) {
    out += std::to_string(candidate.partner_index);
    out += ',';
    out += format_fixed(candidate.mean_gap_exact, 6);
    out += ',';
    out += format_fixed(candidate.mean_gap_predicted, 6);
    out += ',';
    out += std::to_string(report.trials);
    out += ',';
    out += format_fixed(rho_db, 2);
    out += '\n';
  }
  return out;
}

}  // namespace coopnoma
