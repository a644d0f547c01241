#pragma once

#include <cstdint>

namespace lcpcert {

// Counter-based uniform stream: the value for (seed, counter) does not depend
// on how many other values were drawn before it, so sample k can be
// evaluated on any worker and still reproduce a sequential run.
inline std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Uniform double in [0, 1) keyed on (seed, sample, coordinate).
inline double counter_uniform(std::uint64_t seed, std::uint64_t sample,
                              std::uint64_t coordinate) noexcept {
  const std::uint64_t key =
      splitmix64(splitmix64(seed) ^ splitmix64(sample * 0x100000001b3ULL + coordinate));
  return static_cast<double>(key >> 11) * 0x1.0p-53;
}

}  // namespace lcpcert
