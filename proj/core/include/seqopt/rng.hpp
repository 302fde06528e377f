#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace seqopt {

/// splitmix64 scramble; used to derive independent per-trial seeds from a
/// base seed. Fixed here so seeds in output files stay auditable across
/// platforms and standard libraries.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

/// Seed for stream `index` of base seed `seed`.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  return splitmix64(seed + 0x9E3779B97F4A7C15ull * (index + 1));
}

/// Uniform draw in [lo, hi] by rejection; unbiased and portable (the
/// standard's uniform_int_distribution is implementation-defined).
inline std::int64_t bounded(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  const std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
  if (range == 0) return static_cast<std::int64_t>(rng());  // full 64-bit span
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % range + 1) % range;
  std::uint64_t draw = rng();
  while (draw > limit) draw = rng();
  return lo + static_cast<std::int64_t>(draw % range);
}

/// Fisher-Yates with the portable bounded draw.
template <typename T>
void shuffle_portable(std::vector<T>& v, std::mt19937_64& rng) {
  for (std::size_t i = v.size(); i > 1; --i) {
    const std::size_t j = static_cast<std::size_t>(bounded(rng, 0, static_cast<std::int64_t>(i) - 1));
    std::swap(v[i - 1], v[j]);
  }
}

}  // namespace seqopt
