#pragma once

#include <cstdint>
#include <string_view>

namespace ck {

// splitmix64: deterministic across platforms, unlike <random> distributions.
struct Sampler {
  std::uint64_t state;

  explicit Sampler(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, n), n > 0, by rejection.
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = ~0ull - ~0ull % n;
    std::uint64_t v;
    do {
      v = next();
    } while (v >= limit);
    return v % n;
  }

  // Uniform in {-3,...,-1, 1,...,3}: nonzero small coefficients.
  int nonzero_coeff() {
    const int v = static_cast<int>(below(6));
    return v < 3 ? v - 3 : v - 2;
  }

  // Uniform in [lo, hi].
  int in_range(int lo, int hi) {
    return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }
};

// Stable per-check, per-sample seed derivation (FNV-1a over the tag, then
// splitmix finalization of base and index).
inline std::uint64_t derive_seed(std::uint64_t base, std::string_view tag, std::uint64_t index) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (const char c : tag) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ull;
  }
  Sampler mix(base ^ h);
  mix.state += index * 0x9e3779b97f4a7c15ull;
  return mix.next();
}

}  // namespace ck
