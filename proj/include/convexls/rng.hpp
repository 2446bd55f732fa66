#pragma once

#include <cstdint>
#include <random>

namespace convexls {

// Deterministic RNG plumbing. Stream seeds are derived from (seed, stream)
// with splitmix64 and drive std::mt19937_64, whose output sequence is fixed
// by the standard; the uniform mappings below avoid library distributions so
// emitted numbers are bit-stable across platforms.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9E3779B97F4A7C15ull;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

inline std::mt19937_64 seeded_stream(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t s = seed;
  std::uint64_t a = splitmix64(s);
  for (std::uint64_t i = 0; i <= stream; ++i) a = splitmix64(s);
  return std::mt19937_64(a);
}

inline double uniform_unit(std::mt19937_64& gen) {
  return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

inline double uniform_in(std::mt19937_64& gen, double lo, double hi) {
  return lo + (hi - lo) * uniform_unit(gen);
}

inline std::size_t uniform_index(std::mt19937_64& gen, std::size_t n) {
  return static_cast<std::size_t>(
      (static_cast<unsigned __int128>(gen()) * static_cast<unsigned __int128>(n)) >> 64);
}

}  // namespace convexls
