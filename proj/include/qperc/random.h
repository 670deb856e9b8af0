#ifndef QPERC_RANDOM_H_
#define QPERC_RANDOM_H_

#include <cstdint>
#include <optional>
#include <random>

namespace qperc {

// SplitMix64 finalizer. Used to derive independent stream seeds.
std::uint64_t splitmix64(std::uint64_t x);

// Derives a child seed from (parent, stream). Stable across platforms.
std::uint64_t mix_seed(std::uint64_t parent, std::uint64_t stream);

// Seeded random stream with platform-independent transforms.
//
// The raw engine is std::mt19937_64, whose output sequence is fixed by the
// standard. The standard distributions are implementation-defined, so all
// derived variates are computed here:
//   uniform()      53 high bits scaled to [0, 1)
//   uniform_int()  rejection sampling on the raw 64-bit output
//   normal()       Marsaglia polar method, spare value cached
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  double uniform();

  // Uniform integer in the inclusive range [lo, hi].
  std::uint64_t uniform_int(std::uint64_t lo, std::uint64_t hi);

  bool bernoulli(double p) { return uniform() < p; }

  // Standard normal N(0, 1).
  double normal();

 private:
  std::mt19937_64 engine_;
  std::optional<double> spare_normal_;
};

}  // namespace qperc

#endif  // QPERC_RANDOM_H_
