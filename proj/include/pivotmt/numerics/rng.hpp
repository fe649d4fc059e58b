#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace pivotmt::num {

// splitmix64 finalizer; used to derive independent sub-seeds.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt);
std::uint64_t mix_seed(std::uint64_t seed, std::string_view salt);

// Seeded generator threaded explicitly through every stochastic op.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  std::uint64_t seed() const { return seed_; }
  std::uint64_t next() { return engine_(); }
  double uniform(double lo, double hi);
  double uniform01();
  double normal();
  std::size_t index(std::size_t n);
  bool bernoulli(double p);

  // Independent child stream; does not advance this engine.
  Rng fork(std::uint64_t salt) const { return Rng(mix_seed(seed_, salt)); }
  Rng fork(std::string_view salt) const { return Rng(mix_seed(seed_, salt)); }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

}  // namespace pivotmt::num
