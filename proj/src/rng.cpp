#include "grioli/rng.hpp"

#include <cmath>
#include <numbers>

namespace grioli {

namespace {

constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;

std::uint64_t mix(std::uint64_t z) {
  z ^= z >> 30;
  z *= 0xBF58476D1CE4E5B9ULL;
  z ^= z >> 27;
  z *= 0x94D049BB133111EBULL;
  z ^= z >> 31;
  return z;
}

}  // namespace

Prng::Prng(std::uint64_t seed, std::uint64_t stream)
    : key_(mix(seed + kGamma * (stream + 1))) {}

Prng::Prng(std::uint64_t key, bool) : key_(key) {}

std::uint64_t Prng::next_u64() { return mix(key_ + kGamma * (++counter_)); }

double Prng::uniform() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double Prng::uniform_open() {
  return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
}

double Prng::uniform(double lo, double hi) {
  return lo + (hi - lo) * uniform();
}

double Prng::normal() {
  const double u1 = uniform_open();
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) *
         std::cos(2.0 * std::numbers::pi * u2);
}

Prng Prng::fork(std::uint64_t stream) const {
  return Prng(mix(key_ + kGamma * (stream + 1)), true);
}

}  // namespace grioli
