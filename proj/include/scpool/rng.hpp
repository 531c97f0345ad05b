#pragma once

#include <array>
#include <cstdint>
#include <vector>

// Self-contained counter-style RNG built from splitmix64 and xoshiro256++.
// Standard-library distributions are implementation-defined, which would make
// designs differ between toolchains; everything here is bit-exact everywhere.

namespace scpool {

inline std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next() {
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t state_;
};

class Xoshiro256pp {
 public:
  explicit Xoshiro256pp(std::uint64_t seed) {
    SplitMix64 sm(seed);
    for (auto& w : s_) w = sm.next();
  }

  std::uint64_t next() {
    const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  // Unbiased integer in [0, bound) via Lemire's multiply-shift with rejection.
  std::uint64_t below(std::uint64_t bound) {
    std::uint64_t x = next();
    __uint128_t m = static_cast<__uint128_t>(x) * bound;
    auto lo = static_cast<std::uint64_t>(m);
    if (lo < bound) {
      const std::uint64_t threshold = (0 - bound) % bound;
      while (lo < threshold) {
        x = next();
        m = static_cast<__uint128_t>(x) * bound;
        lo = static_cast<std::uint64_t>(m);
      }
    }
    return static_cast<std::uint64_t>(m >> 64);
  }

  double uniform01() { return (next() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return uniform01() < p; }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }
  std::array<std::uint64_t, 4> s_;
};

// Independent stream keyed by (master seed, domain, index); used so that pool
// construction, label sampling and per-trial runs never share a stream.
inline Xoshiro256pp stream_rng(std::uint64_t master, std::uint64_t domain,
                               std::uint64_t index = 0) {
  std::uint64_t s = mix64(master ^ 0x853c49e6748fea9bULL);
  s = mix64(s ^ mix64(domain));
  s = mix64(s ^ mix64(index));
  return Xoshiro256pp(s);
}

namespace rng_domain {
inline constexpr std::uint64_t kPoolFill = 1;
inline constexpr std::uint64_t kBulkLabels = 2;
inline constexpr std::uint64_t kSeedLabels = 3;
inline constexpr std::uint64_t kTrial = 4;
inline constexpr std::uint64_t kOracle = 5;
}  // namespace rng_domain

// Fixed splitting function for per-trial seeds inside sweeps.
inline std::uint64_t trial_seed(std::uint64_t master, std::uint64_t trial) {
  return mix64(master ^ mix64(rng_domain::kTrial + trial));
}

template <typename T>
void fisher_yates_shuffle(std::vector<T>& v, Xoshiro256pp& rng) {
  for (std::size_t i = v.size(); i > 1; --i) {
    std::size_t j = static_cast<std::size_t>(rng.below(i));
    std::swap(v[i - 1], v[j]);
  }
}

}  // namespace scpool
