#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

namespace ccuf {

using Rng = std::mt19937_64;

/// Named stream families. Each consumer draws from its own stream so that
/// changing one parameter does not shift the random sequence of another.
enum class Stream : std::uint64_t {
  kTopology = 1,
  kUsers = 2,
  kMobility = 3,
  kRequests = 4,
  kChannel = 5,
  kActivity = 6,
  kDeployment = 7,
  kDemand = 8,
  kHandover = 9,
  kAnalytics = 10,
};

constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

constexpr std::uint64_t derive_seed(std::uint64_t seed, std::initializer_list<std::uint64_t> path) {
  std::uint64_t h = splitmix64(seed);
  for (std::uint64_t p : path) h = splitmix64(h ^ splitmix64(p + 0x632be59bd9b4e019ULL));
  return h;
}

inline Rng make_stream(std::uint64_t seed, std::uint64_t replication, Stream family, std::uint64_t index = 0) {
  std::seed_seq seq{derive_seed(seed, {replication, static_cast<std::uint64_t>(family), index}),
                    derive_seed(seed ^ 0xa5a5a5a5a5a5a5a5ULL, {index, replication})};
  return Rng(seq);
}

inline double uniform01(Rng& rng) { return std::uniform_real_distribution<double>(0.0, 1.0)(rng); }

}  // namespace ccuf
