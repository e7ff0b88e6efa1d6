#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace wpsgd {

// Deterministic random source. std::mt19937_64 is fully specified by the
// standard, so raw draws are identical on every conforming platform; the
// distribution helpers below are hand-rolled because the standard library's
// distributions are not portable across implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Unbiased integer in [0, n) via rejection sampling. n must be > 0.
  std::uint64_t next_below(std::uint64_t n) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % n;
  }

  // Uniform in [0, 1), 53-bit resolution.
  double next_unit() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  // Uniform in (0, 1].
  double next_unit_positive() {
    return static_cast<double>((engine_() >> 11) + 1) * 0x1.0p-53;
  }

 private:
  std::mt19937_64 engine_;
};

// Per-node sub-seed: node i draws from stream seed^i, mixed by the
// generator's own seed expansion. Stream 0 is the seed itself, so a
// one-node run coincides with the standalone trainer.
inline std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t stream) {
  return seed ^ stream;
}

// Backward Fisher-Yates with portable draws.
template <typename T>
void shuffle_in_place(std::vector<T>& items, Rng& rng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    const std::size_t j = static_cast<std::size_t>(rng.next_below(i));
    using std::swap;
    swap(items[i - 1], items[j]);
  }
}

}  // namespace wpsgd
