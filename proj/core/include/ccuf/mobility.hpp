#pragma once

#include <bit>
#include <cstdint>
#include <string>

#include "ccuf/geometry.hpp"
#include "ccuf/network.hpp"
#include "ccuf/rng.hpp"

namespace ccuf {

enum class MobilityModel { kSimple, kRandomWalk, kLatticeWalk };

std::string to_string(MobilityModel m);
MobilityModel mobility_from_string(const std::string& name);

/// Segments held for the content currently being downloaded. Supports up to 64 segments.
struct DownloadState {
  int content = 0;
  std::uint64_t held = 0;
  int segments = 0;
  double delay_s = 0.0;

  bool active() const { return content != 0; }
  int held_count() const { return std::popcount(held); }
  bool has(int segment) const { return (held >> segment) & 1U; }
  bool complete() const { return held_count() >= segments; }
  /// Lowest 0-based segment not yet held, or -1.
  int lowest_missing() const;
  void add(int segment) { held |= std::uint64_t{1} << segment; }
};

struct GroundUser {
  int id = 0;
  Vec2 position;
  double speed_mps = 0.0;
  double heading_rad = 0.0;
  bool indoor = false;
  /// Consecutive steps without moving.
  int still_steps = 0;
  /// Intra-cluster indices of cells visited during the current download.
  std::uint64_t visited = 0;
  DownloadState download;

  bool stationary() const { return still_steps >= 2; }
};

/// Index of the next cluster member for a walker at `current` that has visited the members in
/// `visited` (bitmask). Simple picks uniformly among unvisited members (all others once every member
/// is visited); the walks pick uniformly among the other members.
int next_cluster_member(MobilityModel model, int current, std::uint64_t visited, int cluster_size, Rng& rng);

/// Uniform point in the coverage cell of `fap`.
Vec2 sample_in_cell(const Network& net, int fap, Rng& rng);

/// Moves the user for one slot of `slot_s` seconds and returns the new position.
Vec2 step(GroundUser& user, MobilityModel model, double slot_s, const Network& net, Rng& rng);

}  // namespace ccuf
