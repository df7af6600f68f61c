#pragma once

#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <random>

namespace spectrum_color {

using Engine = std::mt19937_64;

/// splitmix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Order-sensitive hash of a list of words; used to derive child seeds.
constexpr std::uint64_t derive_seed(std::initializer_list<std::uint64_t> parts) {
  std::uint64_t h = 0x6a09e667f3bcc909ULL;
  for (std::uint64_t p : parts) h = mix64(h ^ mix64(p));
  return h;
}

/// Uniform integer in [lo, hi].
template <typename Int>
Int uniform_int(Engine& rng, Int lo, Int hi) {
  return std::uniform_int_distribution<Int>(lo, hi)(rng);
}

inline double uniform_unit(Engine& rng) {
  return std::uniform_real_distribution<double>(0.0, 1.0)(rng);
}

/// Unbiased map of 32 random bits to [0, range) by multiply-and-reject;
/// fresh bits come from `rng` only on rejection. Cheaper than a
/// distribution object in hot loops.
inline std::uint32_t bounded32(std::uint32_t bits, std::uint32_t range, Engine& rng) {
  std::uint64_t product = static_cast<std::uint64_t>(bits) * range;
  auto low = static_cast<std::uint32_t>(product);
  if (low < range) {
    const std::uint32_t reject_below = (0u - range) % range;
    while (low < reject_below) {
      product = static_cast<std::uint64_t>(static_cast<std::uint32_t>(rng())) * range;
      low = static_cast<std::uint32_t>(product);
    }
  }
  return static_cast<std::uint32_t>(product >> 32);
}

/// `bits32 < threshold32(rate)` holds with probability rate (to 2^-32).
inline std::uint64_t threshold32(double rate) {
  if (rate <= 0.0) return 0;
  if (rate >= 1.0) return std::uint64_t{1} << 32;
  return static_cast<std::uint64_t>(std::ldexp(rate, 32));
}

}  // namespace spectrum_color
