#pragma once

#include <cstdint>
#include <random>

namespace sparsehfs {

// splitmix64 finalizer; good avalanche, cheap.
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t hash_combine(std::uint64_t a, std::uint64_t b) {
  return mix64(a ^ mix64(b));
}

// Counter-based stream key: results do not depend on the order in which
// streams are consumed, only on the (seed, tags...) key.
template <typename... Tags>
std::uint64_t stream_key(std::uint64_t seed, Tags... tags) {
  std::uint64_t k = mix64(seed);
  ((k = hash_combine(k, static_cast<std::uint64_t>(tags))), ...);
  return k;
}

template <typename... Tags>
std::mt19937_64 make_rng(std::uint64_t seed, Tags... tags) {
  return std::mt19937_64(stream_key(seed, tags...));
}

}  // namespace sparsehfs
