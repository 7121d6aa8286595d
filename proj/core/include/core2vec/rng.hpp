#pragma once

#include <cstdint>
#include <vector>

namespace core2vec {

/// SplitMix64 generator. Small, fast, and fully specified, so sampled
/// sequences are bit-identical across platforms and standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform double in [0, 1).
  double next_double() { return (next_u64() >> 11) * 0x1.0p-53; }

  /// Uniform integer in [0, bound). Rejection-free Lemire reduction is
  /// overkill here; modulo bias is < 2^-32 for the bounds we use.
  std::uint64_t next_below(std::uint64_t bound) { return next_u64() % bound; }

 private:
  std::uint64_t state_;
};

/// Mixes a base seed with stream coordinates so that independent consumers
/// (one per walk, one per worker) get decorrelated generators while the
/// whole run stays reproducible from the single top-level seed.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0) {
  Rng mix(seed ^ (a * 0x9e3779b97f4a7c15ULL) ^ (b * 0xc2b2ae3d27d4eb4fULL));
  return mix.next_u64();
}

/// Fisher-Yates shuffle driven by Rng (std::shuffle is not required to be
/// reproducible across standard libraries).
template <typename T>
void shuffle(std::vector<T>& xs, Rng& rng) {
  for (std::size_t i = xs.size(); i > 1; --i) {
    std::size_t j = static_cast<std::size_t>(rng.next_below(i));
    std::swap(xs[i - 1], xs[j]);
  }
}

}  // namespace core2vec
