#pragma once

#include <cmath>
#include <cstdint>

namespace vecdrive {

// Deterministic per-environment random stream (xoshiro256++ seeded via
// splitmix64). Streams derived from the same (seed, env, episode) triple are
// identical; distinct env indices give statistically independent streams.
//
// The distributions are implemented here rather than taken from <random> so
// draws are reproducible across standard library versions.
class Rng {
 public:
  Rng() : Rng(0) {}

  explicit Rng(uint64_t seed) {
    uint64_t x = seed;
    for (auto& si : s_) si = splitmix64(x);
    has_cached_normal_ = false;
    cached_normal_ = 0.0;
  }

  // Stream for environment `env_index` at episode `episode`. `stream` selects
  // independent substreams for one owner (scene generation vs. stepping).
  static Rng derive(uint64_t seed, uint64_t env_index, uint64_t episode,
                    uint64_t stream = 0) {
    uint64_t x = seed;
    uint64_t h = splitmix64(x);
    x = h ^ (env_index + 0x9e3779b97f4a7c15ull);
    h = splitmix64(x);
    x = h ^ (episode + 0xbf58476d1ce4e5b9ull);
    h = splitmix64(x);
    x = h ^ (stream + 0x94d049bb133111ebull);
    return Rng(splitmix64(x));
  }

  uint64_t next_u64() {
    const uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
    const uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  // Uniform in [0, 1).
  double uniform() { return double(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Uniform integer in [0, n). n must be > 0.
  uint64_t uniform_int(uint64_t n) {
    // Lemire-style rejection-free enough for simulation use; bias is
    // negligible for n << 2^64 but we reject to keep it exact.
    uint64_t x = next_u64();
    __uint128_t m = __uint128_t(x) * __uint128_t(n);
    uint64_t l = uint64_t(m);
    if (l < n) {
      uint64_t t = (0 - n) % n;
      while (l < t) {
        x = next_u64();
        m = __uint128_t(x) * __uint128_t(n);
        l = uint64_t(m);
      }
    }
    return uint64_t(m >> 64);
  }

  bool bernoulli(double p) { return uniform() < p; }

  // Standard normal via Marsaglia polar method.
  double normal() {
    if (has_cached_normal_) {
      has_cached_normal_ = false;
      return cached_normal_;
    }
    double u, v, s;
    do {
      u = 2.0 * uniform() - 1.0;
      v = 2.0 * uniform() - 1.0;
      s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    const double f = std::sqrt(-2.0 * std::log(s) / s);
    cached_normal_ = v * f;
    has_cached_normal_ = true;
    return u * f;
  }

  double normal(double mean, double stddev) { return mean + stddev * normal(); }

 private:
  static uint64_t splitmix64(uint64_t& x) {
    x += 0x9e3779b97f4a7c15ull;
    uint64_t z = x;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  static uint64_t rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

  uint64_t s_[4];
  bool has_cached_normal_;
  double cached_normal_;
};

}  // namespace vecdrive
