#pragma once

#include <cstdint>

namespace qcwalk {

/// Counter-style splitmix64 generator. Small state, fully deterministic
/// across platforms, and cheap to fork into independent per-run streams.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Unbiased integer in [0, bound). Lemire's multiply-shift with rejection.
  std::uint64_t below(std::uint64_t bound) {
    // bound >= 1; callers guarantee it.
    auto mul = [](std::uint64_t a, std::uint64_t b) {
      return static_cast<unsigned __int128>(a) * b;
    };
    std::uint64_t x = next_u64();
    unsigned __int128 m = mul(x, bound);
    auto lo = static_cast<std::uint64_t>(m);
    if (lo < bound) {
      std::uint64_t t = -bound % bound;
      while (lo < t) {
        x = next_u64();
        m = mul(x, bound);
        lo = static_cast<std::uint64_t>(m);
      }
    }
    return static_cast<std::uint64_t>(m >> 64);
  }

  int below_int(int bound) { return static_cast<int>(below(static_cast<std::uint64_t>(bound))); }

  /// Uniform double in [0, 1) with 53 random bits.
  double unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Independent stream for run `index` under one master seed: the stream id
  /// is mixed through the generator's own finalizer, so streams don't overlap
  /// in practice for desk-scale trial counts.
  static Rng derived(std::uint64_t master, std::uint64_t index) {
    Rng mix(master ^ (0x632be59bd9b4e019ULL * (index + 1)));
    return Rng(mix.next_u64());
  }

 private:
  std::uint64_t state_;
};

}  // namespace qcwalk
