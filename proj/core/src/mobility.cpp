#include "ccuf/mobility.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace ccuf {

std::string to_string(MobilityModel m) {
  switch (m) {
    case MobilityModel::kSimple: return "simple";
    case MobilityModel::kRandomWalk: return "random_walk";
    case MobilityModel::kLatticeWalk: return "lattice_walk";
  }
  return "unknown";
}

MobilityModel mobility_from_string(const std::string& name) {
  if (name == "simple") return MobilityModel::kSimple;
  if (name == "random_walk") return MobilityModel::kRandomWalk;
  if (name == "lattice_walk") return MobilityModel::kLatticeWalk;
  throw std::invalid_argument("unknown mobility model '" + name + "' (expected simple, random_walk or lattice_walk)");
}

int DownloadState::lowest_missing() const {
  for (int s = 0; s < segments; ++s) {
    if (!has(s)) return s;
  }
  return -1;
}

namespace {

template <class T>
T pick(const std::vector<T>& xs, Rng& rng) {
  return xs[std::uniform_int_distribution<std::size_t>(0, xs.size() - 1)(rng)];
}

}  // namespace

int next_cluster_member(MobilityModel model, int current, std::uint64_t visited, int cluster_size, Rng& rng) {
  if (cluster_size <= 1) return current;
  std::vector<int> options;
  if (model == MobilityModel::kSimple) {
    for (int k = 0; k < cluster_size; ++k) {
      if (k != current && !((visited >> k) & 1U)) options.push_back(k);
    }
  }
  if (options.empty()) {
    for (int k = 0; k < cluster_size; ++k) {
      if (k != current) options.push_back(k);
    }
  }
  return pick(options, rng);
}

Vec2 sample_in_cell(const Network& net, int fap, Rng& rng) {
  const FapSite& f = net.fap(fap);
  for (int attempt = 0; attempt < 64; ++attempt) {
    const double rho = f.range_m * std::sqrt(uniform01(rng));
    const double theta = 2.0 * M_PI * uniform01(rng);
    const Vec2 p = f.position + Vec2{rho * std::cos(theta), rho * std::sin(theta)};
    if (net.nearest_fap(p) == fap) return p;
  }
  return f.position;
}

Vec2 step(GroundUser& user, MobilityModel model, double slot_s, const Network& net, Rng& rng) {
  (void)slot_s;
  if (user.speed_mps <= 0.0 || net.faps().empty()) {
    ++user.still_steps;
    return user.position;
  }
  const int here = net.nearest_fap(user.position);
  const FapSite& cur = net.fap(here);
  user.visited |= std::uint64_t{1} << cur.cluster_index;

  int dest = here;
  if (model == MobilityModel::kSimple && cur.lattice) {
    std::vector<int> fresh;
    for (int n : net.lattice_neighbors(here)) {
      if (!((user.visited >> net.fap(n).cluster_index) & 1U)) fresh.push_back(n);
    }
    if (fresh.empty()) {
      user.visited = std::uint64_t{1} << cur.cluster_index;
      for (int n : net.lattice_neighbors(here)) fresh.push_back(n);
    }
    if (!fresh.empty()) dest = pick(fresh, rng);
  } else if (model == MobilityModel::kLatticeWalk && cur.lattice) {
    const auto nbrs = net.lattice_neighbors(here);
    if (!nbrs.empty()) dest = pick(nbrs, rng);
  } else {
    const auto& members = net.cluster(cur.cluster_id);
    const int k = next_cluster_member(model, cur.cluster_index, user.visited, static_cast<int>(members.size()), rng);
    dest = members[static_cast<std::size_t>(k)];
  }

  const Vec2 next = sample_in_cell(net, dest, rng);
  const Vec2 delta = next - user.position;
  if (delta.norm2() > 0.0) user.heading_rad = std::atan2(delta.y, delta.x);
  user.visited |= std::uint64_t{1} << net.fap(dest).cluster_index;
  user.position = next;
  user.still_steps = 0;
  return next;
}

}  // namespace ccuf
