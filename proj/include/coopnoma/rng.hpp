#pragma once

#include <cstdint>

namespace coopnoma {

// Small splittable generator (splitmix64). Chosen over std engines so that
// draws are bit-identical across platforms and so each Monte Carlo trial can
// derive an independent stream from (master seed, trial index) in O(1).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  // Stream for one Monte Carlo trial, decoupled from thread layout.
  static Rng for_trial(std::uint64_t master_seed, std::uint64_t trial_index);

  std::uint64_t next_u64();

  // Uniform on [0, 1) with 53 random bits.
  double next_double();

  // Exponential with the given mean (mean > 0).
  double next_exponential(double mean);

 private:
  std::uint64_t state_;
};

// Stateless 64-bit finalizer used for seed derivation.
std::uint64_t mix64(std::uint64_t x);

}  // namespace coopnoma
