#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

namespace simplexmatch {

// splitmix64 finalizer
std::uint64_t mix64(std::uint64_t x);

// Child seed for a path of indices below a base seed, e.g. derive_seed(base, {sigma_idx, trial}).
std::uint64_t derive_seed(std::uint64_t base, std::initializer_list<std::uint64_t> path);

// Seeded stream with a fixed, platform-independent set of transforms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  std::uint64_t next() { return engine_(); }
  // Uniform on (0, 1].
  double uniform();
  // Box–Muller, both outputs used in order.
  double normal();
  double exponential();
  bool bernoulli(double p);
  // Uniform integer in [0, bound), unbiased by rejection.
  std::uint64_t below(std::uint64_t bound);

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace simplexmatch
