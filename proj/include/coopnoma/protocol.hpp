#pragma once

#include <cstdint>
#include <vector>

#include "coopnoma/channel.hpp"
#include "coopnoma/config.hpp"

namespace coopnoma {

enum class Scheme { OrthogonalMA, NonCooperativeNoma, CooperativeNoma };

// Stable identifier used in CSV output and CLI flags.
const char* scheme_name(Scheme scheme);
bool scheme_from_name(const std::string& name, Scheme& out);

// Received SINR at observer j for message k during the direct phase:
// |h_j|^2 p_k^2 / (|h_j|^2 sum_{m>k} p_m^2 + 1/rho). The interference sum is
// empty for k = K, where this reduces to rho |h_K|^2 p_K^2.
double snr_direct(const ChannelRealization& real, const SystemConfig& config,
                  int observer, int message);

// Combined direct + cooperative SINR at `observer` for `message`, summing the
// direct-phase term and one term per active relay r (observer < r <= K):
// |g_{r,o}|^2 q_{r,k}^2 / (|g_{r,o}|^2 sum_{m=k+1}^{r-1} q_{r,m}^2 + 1/rho),
// which reduces to rho |g|^2 q^2 when the relay's interference sum is empty.
// active_relays must only contain users ranked above the observer.
double snr_cooperative(const ChannelRealization& real, const SystemConfig& config,
                       int observer, int message,
                       const std::vector<int>& active_relays);

// Per-user, per-message decode record for one realization. Row j covers the
// messages user j must decode (k = 1..j); entries a scheme does not evaluate
// (off-diagonal ones under OrthogonalMA) are vacuously successful with SNR 0.
struct DecodeOutcome {
  int num_users = 0;
  std::vector<std::uint8_t> success;  // lower-triangular rows, flattened
  std::vector<double> snr;            // realized SINR behind each entry
  std::vector<std::uint8_t> user_ok;  // user_ok[j-1] == conjunction of row j

  bool ok(int observer, int message) const;
  double snr_at(int observer, int message) const;
  static std::size_t index(int observer, int message);
};

// Evaluates one realization under a scheme.
//   OrthogonalMA:        user j succeeds iff (1/K) log2(1 + rho |h_j|^2) > R_j.
//   NonCooperativeNoma:  entry (j,k) succeeds iff snr_direct(j,k) > 2^R_k - 1.
//   CooperativeNoma:     entry (j,k) compares the combined SINR against the
//                        threshold from config.cooperation_mode; users are
//                        evaluated from the best rank down, and under
//                        DecodeAndForward user r relays only if user_ok[r]
//                        (failed relays stay silent). GenieAided keeps every
//                        better-ranked relay active.
DecodeOutcome evaluate_decode(const ChannelRealization& real,
                              const SystemConfig& config, Scheme scheme);

}  // namespace coopnoma
