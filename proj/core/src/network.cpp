#include "ccuf/network.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace ccuf {

std::string to_string(Layout layout) { return layout == Layout::kHex ? "hex" : "ppp"; }

Layout layout_from_string(const std::string& name) {
  if (name == "hex") return Layout::kHex;
  if (name == "ppp") return Layout::kPpp;
  throw std::invalid_argument("unknown layout '" + name + "' (expected hex or ppp)");
}

Network::Network(Layout layout, double region_radius_m, std::vector<FapSite> faps, std::vector<UavSite> uavs,
                 Vec3 server_position, std::vector<Rect> indoor_regions)
    : layout_(layout),
      region_radius_(region_radius_m),
      faps_(std::move(faps)),
      uavs_(std::move(uavs)),
      server_(server_position),
      indoor_(std::move(indoor_regions)) {
  int n_clusters = 0;
  for (std::size_t i = 0; i < faps_.size(); ++i) {
    if (faps_[i].id != static_cast<int>(i)) throw std::invalid_argument("Network: FAP ids must be 0..N_f-1 in order");
    n_clusters = std::max(n_clusters, faps_[i].cluster_id + 1);
  }
  clusters_.assign(static_cast<std::size_t>(n_clusters), {});
  for (const auto& f : faps_) clusters_[static_cast<std::size_t>(f.cluster_id)].push_back(f.id);
  for (auto& members : clusters_) {
    std::sort(members.begin(), members.end(), [this](int a, int b) {
      return faps_[static_cast<std::size_t>(a)].cluster_index < faps_[static_cast<std::size_t>(b)].cluster_index;
    });
    for (std::size_t k = 0; k < members.size(); ++k) {
      if (faps_[static_cast<std::size_t>(members[k])].cluster_index != static_cast<int>(k))
        throw std::invalid_argument("Network: intra-cluster indices must be 0..N_b-1");
    }
    if (members.size() != clusters_.front().size())
      throw std::invalid_argument("Network: inter-clusters must have equal size");
  }
  for (const auto& f : faps_) {
    if (f.lattice && !by_lattice_.emplace(*f.lattice, f.id).second)
      throw std::invalid_argument("Network: duplicate lattice coordinate");
  }
}

int Network::nearest_fap(Vec2 p) const {
  if (faps_.empty()) return -1;
  if (layout_ == Layout::kHex && !by_lattice_.empty()) {
    const auto it = by_lattice_.find(point_to_hex(p, faps_.front().range_m));
    if (it != by_lattice_.end()) return it->second;
  }
  int best = 0;
  double best_d = distance2(p, faps_.front().position);
  for (std::size_t i = 1; i < faps_.size(); ++i) {
    const double d = distance2(p, faps_[i].position);
    if (d < best_d) {
      best_d = d;
      best = static_cast<int>(i);
    }
  }
  return best;
}

std::optional<int> Network::fap_at(HexCoord h) const {
  const auto it = by_lattice_.find(h);
  if (it == by_lattice_.end()) return std::nullopt;
  return it->second;
}

std::vector<int> Network::lattice_neighbors(int fap_id) const {
  std::vector<int> out;
  const auto& f = fap(fap_id);
  if (!f.lattice) return out;
  for (const HexCoord d : kHexDirections) {
    if (auto n = fap_at(*f.lattice + d)) out.push_back(*n);
  }
  return out;
}

bool operator==(const Network& a, const Network& b) {
  if (a.layout_ != b.layout_ || a.region_radius_ != b.region_radius_ || !(a.server_ == b.server_) ||
      a.indoor_ != b.indoor_ || a.faps_.size() != b.faps_.size() || a.uavs_.size() != b.uavs_.size())
    return false;
  for (std::size_t i = 0; i < a.faps_.size(); ++i) {
    const auto& x = a.faps_[i];
    const auto& y = b.faps_[i];
    if (x.id != y.id || !(x.position == y.position) || x.tx_power_dbm != y.tx_power_dbm || x.range_m != y.range_m ||
        x.cache_capacity != y.cache_capacity || x.cluster_id != y.cluster_id || x.cluster_index != y.cluster_index ||
        x.lattice != y.lattice)
      return false;
  }
  for (std::size_t i = 0; i < a.uavs_.size(); ++i) {
    const auto& x = a.uavs_[i];
    const auto& y = b.uavs_[i];
    if (x.id != y.id || !(x.position == y.position) || x.altitude_m != y.altitude_m ||
        x.tx_power_dbm != y.tx_power_dbm || x.range_m != y.range_m || x.cache_capacity != y.cache_capacity ||
        x.battery_j != y.battery_j)
      return false;
  }
  return true;
}

namespace {

Vec2 uniform_in_disc(double radius, Rng& rng) {
  const double u = uniform01(rng);
  const double theta = 2.0 * M_PI * uniform01(rng);
  const double rho = radius * std::sqrt(u);
  return {rho * std::cos(theta), rho * std::sin(theta)};
}

// Cluster centres on the sublattice spanned by (2,1) and (-1,3), nearest the origin first.
std::vector<HexCoord> flower_centres(int count) {
  std::vector<HexCoord> pts;
  const int span = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(count)))) + 2;
  for (int a = -span; a <= span; ++a) {
    for (int b = -span; b <= span; ++b) pts.push_back(HexCoord{2, 1} * a + HexCoord{-1, 3} * b);
  }
  auto key = [](HexCoord h) {
    const Vec2 p = hex_to_point(h, 1.0);
    double ang = std::atan2(p.y, p.x);
    if (ang < 0) ang += 2.0 * M_PI;
    return std::pair{hex_norm2(h), ang};
  };
  std::sort(pts.begin(), pts.end(), [&](HexCoord x, HexCoord y) { return key(x) < key(y); });
  pts.resize(static_cast<std::size_t>(count));
  return pts;
}

std::vector<FapSite> hex_faps(const TopologyParams& p) {
  if (p.cluster_size != 7 && p.cluster_size != 1)
    throw std::invalid_argument("topology.cluster_size: hex layout supports 7-cell flowers (or 1)");
  if (p.fap_count % p.cluster_size != 0)
    throw std::invalid_argument("topology.fap_count: " + std::to_string(p.fap_count) +
                                " FAPs cannot be tiled into inter-clusters of " + std::to_string(p.cluster_size));
  const int n_clusters = p.fap_count / p.cluster_size;
  std::vector<FapSite> faps;
  faps.reserve(static_cast<std::size_t>(p.fap_count));
  if (p.cluster_size == 1) {
    // Single-cell clusters: fill the lattice in rings around the origin.
    std::vector<HexCoord> cells;
    const int span = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(n_clusters)))) + 2;
    for (int q = -span; q <= span; ++q)
      for (int r = -span; r <= span; ++r) cells.push_back({q, r});
    std::stable_sort(cells.begin(), cells.end(), [](HexCoord a, HexCoord b) {
      return std::pair{hex_distance(a, {}), a} < std::pair{hex_distance(b, {}), b};
    });
    for (int c = 0; c < n_clusters; ++c) {
      FapSite f;
      f.id = c;
      f.lattice = cells[static_cast<std::size_t>(c)];
      f.cluster_id = c;
      f.cluster_index = 0;
      faps.push_back(f);
    }
  } else {
    const auto centres = flower_centres(n_clusters);
    for (int c = 0; c < n_clusters; ++c) {
      std::array<HexCoord, 7> members{};
      members[0] = centres[static_cast<std::size_t>(c)];
      for (const HexCoord d : kHexDirections) {
        const HexCoord cell = centres[static_cast<std::size_t>(c)] + d;
        members[static_cast<std::size_t>(reuse_label(cell, 2, 1))] = cell;
      }
      for (int k = 0; k < 7; ++k) {
        FapSite f;
        f.id = c * 7 + k;
        f.lattice = members[static_cast<std::size_t>(k)];
        f.cluster_id = c;
        f.cluster_index = k;
        faps.push_back(f);
      }
    }
  }
  for (auto& f : faps) {
    f.position = hex_to_point(*f.lattice, p.fap_range_m);
    if (f.position.norm() > p.region_radius_m)
      throw std::invalid_argument("topology.region_radius_m: " + std::to_string(p.fap_count) +
                                  " hex FAPs do not fit in a disc of radius " + std::to_string(p.region_radius_m));
  }
  return faps;
}

std::vector<FapSite> ppp_faps(const TopologyParams& p, Rng& rng) {
  int count = p.fap_count > 0 ? std::poisson_distribution<int>(p.fap_count)(rng) : 0;
  count -= count % p.cluster_size;
  std::vector<Vec2> pts(static_cast<std::size_t>(count));
  for (auto& pt : pts) pt = uniform_in_disc(p.region_radius_m, rng);

  std::vector<FapSite> faps(static_cast<std::size_t>(count));
  std::vector<bool> taken(pts.size(), false);
  int cluster = 0;
  for (int done = 0; done < count; done += p.cluster_size, ++cluster) {
    int seed = -1;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (!taken[i] && (seed < 0 || pts[i].norm2() > pts[static_cast<std::size_t>(seed)].norm2()))
        seed = static_cast<int>(i);
    }
    std::vector<int> rest;
    for (std::size_t i = 0; i < pts.size(); ++i)
      if (!taken[i] && static_cast<int>(i) != seed) rest.push_back(static_cast<int>(i));
    const Vec2 anchor = pts[static_cast<std::size_t>(seed)];
    std::stable_sort(rest.begin(), rest.end(), [&](int a, int b) {
      return distance2(pts[static_cast<std::size_t>(a)], anchor) < distance2(pts[static_cast<std::size_t>(b)], anchor);
    });
    std::vector<int> group{seed};
    group.insert(group.end(), rest.begin(), rest.begin() + (p.cluster_size - 1));
    for (std::size_t k = 0; k < group.size(); ++k) {
      taken[static_cast<std::size_t>(group[k])] = true;
      FapSite& f = faps[static_cast<std::size_t>(done) + k];
      f.position = pts[static_cast<std::size_t>(group[k])];
      f.cluster_id = cluster;
      f.cluster_index = static_cast<int>(k);
    }
  }
  for (std::size_t i = 0; i < faps.size(); ++i) faps[i].id = static_cast<int>(i);
  return faps;
}

}  // namespace

std::vector<Rect> building_grid(double region_radius_m, double pitch_m, double fraction) {
  std::vector<Rect> out;
  if (fraction <= 0.0 || pitch_m <= 0.0) return out;
  const double side = pitch_m * std::sqrt(std::min(fraction, 1.0));
  const int n = static_cast<int>(std::ceil(region_radius_m / pitch_m));
  for (int i = -n; i <= n; ++i) {
    for (int j = -n; j <= n; ++j) {
      const Vec2 c{i * pitch_m, j * pitch_m};
      if (c.norm() > region_radius_m) continue;
      out.push_back({c.x - side / 2, c.y - side / 2, c.x + side / 2, c.y + side / 2});
    }
  }
  return out;
}

Network build_topology(const TopologyParams& p, Rng& rng) {
  if (p.cluster_size < 1) throw std::invalid_argument("topology.cluster_size: must be >= 1");
  if (p.fap_count < 0) throw std::invalid_argument("topology.fap_count: must be >= 0");
  if (p.fap_count > 0 && p.fap_count < p.cluster_size)
    throw std::invalid_argument("topology.fap_count: must be >= cluster_size");
  if (!(p.region_radius_m > 0)) throw std::invalid_argument("topology.region_radius_m: must be > 0");

  std::vector<FapSite> faps = p.layout == Layout::kHex ? hex_faps(p) : ppp_faps(p, rng);
  for (auto& f : faps) {
    f.tx_power_dbm = p.fap_tx_power_dbm;
    f.range_m = p.fap_range_m;
    f.cache_capacity = p.fap_cache_capacity;
  }
  std::vector<UavSite> uavs(static_cast<std::size_t>(p.uav_count));
  for (std::size_t k = 0; k < uavs.size(); ++k) {
    uavs[k].id = static_cast<int>(k);
    uavs[k].position = uniform_in_disc(p.region_radius_m, rng);
    uavs[k].altitude_m = p.uav_altitude_m;
    uavs[k].tx_power_dbm = p.uav_tx_power_dbm;
    uavs[k].range_m = p.uav_range_m;
    uavs[k].cache_capacity = p.uav_cache_capacity;
    uavs[k].battery_j = p.uav_battery_j;
  }
  std::vector<Rect> indoor = p.indoor_regions.empty()
                                 ? building_grid(p.region_radius_m, p.building_pitch_m, p.indoor_fraction)
                                 : p.indoor_regions;
  return Network(p.layout, p.region_radius_m, std::move(faps), std::move(uavs), p.server_position, std::move(indoor));
}

bool is_indoor(Vec2 p, const Network& net) {
  return std::any_of(net.indoor_regions().begin(), net.indoor_regions().end(),
                     [p](const Rect& r) { return r.contains(p); });
}

double coverage_threshold_dbm(double rssi_ref_dbm, double path_loss_exponent, double reference_m, double range_m) {
  return rssi_ref_dbm - 10.0 * path_loss_exponent * std::log10(range_m / reference_m);
}

double received_rssi_dbm(double distance_m, double shadow_db, const CoverageParams& params) {
  const double d = std::max(distance_m, params.reference_m);
  return params.rssi_ref_dbm - 10.0 * params.path_loss_exponent * std::log10(d / params.reference_m) - shadow_db;
}

bool fap_covers(const FapSite& fap, Vec2 p, double shadow_db, const CoverageParams& params) {
  return received_rssi_dbm(distance(fap.position, p), shadow_db, params) >= params.rssi_threshold_dbm;
}

namespace {

nlohmann::json rect_json(const Rect& r) { return {r.x_min, r.y_min, r.x_max, r.y_max}; }
Rect rect_from(const nlohmann::json& j) {
  return {j.at(0).get<double>(), j.at(1).get<double>(), j.at(2).get<double>(), j.at(3).get<double>()};
}

}  // namespace

void to_json(nlohmann::json& j, const Network& net) {
  j = nlohmann::json::object();
  j["layout"] = to_string(net.layout());
  j["region_radius_m"] = net.region_radius();
  j["server_position"] = {net.server_position().x, net.server_position().y, net.server_position().z};
  auto& faps = j["faps"] = nlohmann::json::array();
  for (const auto& f : net.faps()) {
    nlohmann::json o{{"id", f.id},
                     {"x", f.position.x},
                     {"y", f.position.y},
                     {"tx_power_dbm", f.tx_power_dbm},
                     {"range_m", f.range_m},
                     {"cache_capacity", f.cache_capacity},
                     {"cluster_id", f.cluster_id},
                     {"cluster_index", f.cluster_index}};
    if (f.lattice) o["lattice"] = {f.lattice->q, f.lattice->r};
    faps.push_back(std::move(o));
  }
  auto& uavs = j["uavs"] = nlohmann::json::array();
  for (const auto& u : net.uavs()) {
    uavs.push_back({{"id", u.id},
                    {"x", u.position.x},
                    {"y", u.position.y},
                    {"altitude_m", u.altitude_m},
                    {"tx_power_dbm", u.tx_power_dbm},
                    {"range_m", u.range_m},
                    {"cache_capacity", u.cache_capacity},
                    {"battery_j", u.battery_j}});
  }
  auto& rects = j["indoor_regions"] = nlohmann::json::array();
  for (const auto& r : net.indoor_regions()) rects.push_back(rect_json(r));
}

void from_json(const nlohmann::json& j, Network& net) {
  std::vector<FapSite> faps;
  for (const auto& o : j.at("faps")) {
    FapSite f;
    f.id = o.at("id").get<int>();
    f.position = {o.at("x").get<double>(), o.at("y").get<double>()};
    f.tx_power_dbm = o.at("tx_power_dbm").get<double>();
    f.range_m = o.at("range_m").get<double>();
    f.cache_capacity = o.at("cache_capacity").get<int>();
    f.cluster_id = o.at("cluster_id").get<int>();
    f.cluster_index = o.at("cluster_index").get<int>();
    if (o.contains("lattice")) f.lattice = HexCoord{o["lattice"].at(0).get<int>(), o["lattice"].at(1).get<int>()};
    faps.push_back(f);
  }
  std::vector<UavSite> uavs;
  for (const auto& o : j.at("uavs")) {
    UavSite u;
    u.id = o.at("id").get<int>();
    u.position = {o.at("x").get<double>(), o.at("y").get<double>()};
    u.altitude_m = o.at("altitude_m").get<double>();
    u.tx_power_dbm = o.at("tx_power_dbm").get<double>();
    u.range_m = o.at("range_m").get<double>();
    u.cache_capacity = o.at("cache_capacity").get<int>();
    u.battery_j = o.at("battery_j").get<double>();
    uavs.push_back(u);
  }
  std::vector<Rect> rects;
  for (const auto& r : j.at("indoor_regions")) rects.push_back(rect_from(r));
  const auto& s = j.at("server_position");
  net = Network(layout_from_string(j.at("layout").get<std::string>()), j.at("region_radius_m").get<double>(),
                std::move(faps), std::move(uavs), Vec3{s.at(0).get<double>(), s.at(1).get<double>(), s.at(2).get<double>()},
                std::move(rects));
}

}  // namespace ccuf
