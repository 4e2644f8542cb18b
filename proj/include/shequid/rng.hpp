#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace shequid::rng {

/// SplitMix64 step; the seed-derivation primitive.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Documented seed-splitting rule: every independent random stream gets
/// derive_seed(master, counter) with a distinct counter. Sweep points and
/// null-calibration runs use their run index as counter, so any subset of
/// runs reproduces bit-identically in any execution order.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t counter) {
  std::uint64_t s = master;
  (void)splitmix64(s);
  s ^= 0x632be59bd9b4e019ULL * (counter + 1);
  return splitmix64(s);
}

/// Deterministic sampler. mt19937_64 is fully specified by the standard and
/// all transforms below are explicit, so streams are bit-reproducible across
/// platforms (stdlib distribution objects are not, and are avoided).
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : gen_(seed) {}

  /// Uniform in [0, 1) with 53-bit resolution.
  double uniform() {
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
  }

  /// Uniform in [a, b).
  double uniform(double a, double b) { return a + (b - a) * uniform(); }

  /// Standard normal via Box-Muller; consumes exactly two uniforms.
  double normal() {
    const double u1 = 1.0 - uniform();  // (0, 1]
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
  }

  double normal(double mean, double sd) { return mean + sd * normal(); }

  /// Exponential with the given rate (events per unit time).
  double exponential(double rate) {
    const double u = 1.0 - uniform();  // (0, 1]
    return -std::log(u) / rate;
  }

  /// Bernoulli(p) draw.
  bool bernoulli(double p) { return uniform() < p; }

 private:
  std::mt19937_64 gen_;
};

}  // namespace shequid::rng
