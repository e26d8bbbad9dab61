#pragma once

#include <cstdint>

namespace grioli {

// Counter-based pseudo-random generator.
//
// Draw i of stream s under seed k is
//
//   mix(mix(k + C * (s + 1)) + C * (i + 1)),   C = 0x9E3779B97F4A7C15,
//
// where mix is the SplitMix64 finalizer
//
//   z ^= z >> 30; z *= 0xBF58476D1CE4E5B9;
//   z ^= z >> 27; z *= 0x94D049BB133111EB;
//   z ^= z >> 31.
//
// Every draw is a pure function of (seed, stream, counter), so sequences are
// reproducible across platforms and independent of evaluation order. Work
// that may be split across threads derives one stream per unit via fork().
class Prng {
 public:
  explicit Prng(std::uint64_t seed, std::uint64_t stream = 0);

  std::uint64_t next_u64();
  double uniform();                      // [0, 1)
  double uniform_open();                 // (0, 1)
  double uniform(double lo, double hi);  // [lo, hi)
  double normal();  // standard normal; Box-Muller, two draws per call

  // Independent substream; deterministic in (this->seed, stream).
  Prng fork(std::uint64_t stream) const;

 private:
  Prng(std::uint64_t key, bool raw);
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace grioli
