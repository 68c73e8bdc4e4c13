#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace ecpart {

/// Deterministic random source shared by every generator and randomized
/// solver. Streams are keyed by (seed, stream index) so independent trials
/// never share state and results do not depend on execution order.
///
/// Only the raw engine output is consumed; the mapping to bounded integers
/// and probabilities is done here so results are identical across standard
/// library implementations.
class Rng {
 public:
  static constexpr std::string_view kName = "mt19937_64+seed_seq/v1";

  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed),
                      static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream),
                      static_cast<std::uint32_t>(stream >> 32)};
    engine_.seed(seq);
  }

  std::uint64_t next() { return engine_(); }

  /// Uniform integer in [0, bound). `bound` must be positive.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % bound;
  }

  /// Uniform double in [0, 1) with 53 bits of resolution.
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return unit() < p; }

  bool coin() { return (engine_() >> 63) != 0; }

  /// Fisher-Yates shuffle driven by `below`.
  template <typename Container>
  void shuffle(Container& c) {
    for (std::size_t i = c.size(); i > 1; --i) {
      std::swap(c[i - 1], c[below(i)]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace ecpart
