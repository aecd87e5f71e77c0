#include "coopnoma/rng.hpp"

#include <cmath>

namespace coopnoma {

namespace {
constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;
}

std::uint64_t mix64(std::uint64_t x) {
  x ^= x >> 30;
  x *= 0xBF58476D1CE4E5B9ULL;
  x ^= x >> 27;
  x *= 0x94D049BB133111EBULL;
  x ^= x >> 31;
  return x;
}

Rng Rng::for_trial(std::uint64_t master_seed, std::uint64_t trial_index) {
  return Rng(mix64(mix64(master_seed) + kGolden * (trial_index + 1)));
}

std::uint64_t Rng::next_u64() {
  state_ += kGolden;
  return mix64(state_);
}

double Rng::next_double() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double Rng::next_exponential(double mean) {
  // u in [0,1) keeps the argument of log1p inside (-1, 0].
  return -mean * std::log1p(-next_double());
}

}  // namespace coopnoma
