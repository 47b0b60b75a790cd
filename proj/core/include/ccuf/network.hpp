#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include <nlohmann/json.hpp>

#include "ccuf/geometry.hpp"
#include "ccuf/rng.hpp"

namespace ccuf {

enum class Layout { kHex, kPpp };

std::string to_string(Layout layout);
Layout layout_from_string(const std::string& name);

struct TopologyParams {
  Layout layout = Layout::kHex;
  int fap_count = 49;
  int cluster_size = 7;
  double region_radius_m = 250.0;
  double fap_range_m = 30.0;
  double fap_tx_power_dbm = 15.0;
  int fap_cache_capacity = 40;
  int uav_count = 3;
  double uav_altitude_m = 100.0;
  double uav_tx_power_dbm = 15.0;
  double uav_range_m = 500.0;
  int uav_cache_capacity = 100;
  double uav_battery_j = 5.0e6;
  Vec3 server_position{0.0, 0.0, 30.0};
  // Generated building grid, used when `indoor_regions` is empty.
  double indoor_fraction = 0.4;
  double building_pitch_m = 50.0;
  std::vector<Rect> indoor_regions;
};

struct FapSite {
  int id = 0;
  Vec2 position;
  double tx_power_dbm = 15.0;
  double range_m = 30.0;
  int cache_capacity = 1;
  int cluster_id = 0;
  int cluster_index = 0;
  std::optional<HexCoord> lattice;
};

struct UavSite {
  int id = 0;
  Vec2 position;
  double altitude_m = 100.0;
  double tx_power_dbm = 15.0;
  double range_m = 500.0;
  int cache_capacity = 1;
  double battery_j = 0.0;
};

class Network {
 public:
  Network() = default;
  Network(Layout layout, double region_radius_m, std::vector<FapSite> faps, std::vector<UavSite> uavs,
          Vec3 server_position, std::vector<Rect> indoor_regions);

  Layout layout() const { return layout_; }
  double region_radius() const { return region_radius_; }
  const std::vector<FapSite>& faps() const { return faps_; }
  const FapSite& fap(int id) const { return faps_.at(static_cast<std::size_t>(id)); }
  const std::vector<UavSite>& uavs() const { return uavs_; }
  Vec3 server_position() const { return server_; }
  const std::vector<Rect>& indoor_regions() const { return indoor_; }

  /// FAP ids per inter-cluster, ordered by intra-cluster index.
  const std::vector<std::vector<int>>& clusters() const { return clusters_; }
  const std::vector<int>& cluster(int id) const { return clusters_.at(static_cast<std::size_t>(id)); }
  int cluster_size() const { return clusters_.empty() ? 0 : static_cast<int>(clusters_.front().size()); }

  /// Nearest FAP to `p` (lowest id on ties); -1 when there are no FAPs.
  int nearest_fap(Vec2 p) const;
  /// FAP occupying a lattice cell, hex layout only.
  std::optional<int> fap_at(HexCoord h) const;
  /// In-network lattice neighbours of a FAP (hex layout), or empty.
  std::vector<int> lattice_neighbors(int fap_id) const;

  friend bool operator==(const Network& a, const Network& b);

 private:
  Layout layout_ = Layout::kHex;
  double region_radius_ = 0.0;
  std::vector<FapSite> faps_;
  std::vector<UavSite> uavs_;
  Vec3 server_;
  std::vector<Rect> indoor_;
  std::vector<std::vector<int>> clusters_;
  std::unordered_map<HexCoord, int> by_lattice_;
};

Network build_topology(const TopologyParams& params, Rng& rng);

/// Building grid covering `fraction` of the square enclosing the disc.
std::vector<Rect> building_grid(double region_radius_m, double pitch_m, double fraction);

bool is_indoor(Vec2 p, const Network& net);

struct CoverageParams {
  double rssi_ref_dbm = -25.05;
  double rssi_threshold_dbm = -69.36;
  double path_loss_exponent = 3.0;
  double reference_m = 1.0;
};

/// Threshold at which the nominal (shadowing-free) coverage radius equals `range_m`.
double coverage_threshold_dbm(double rssi_ref_dbm, double path_loss_exponent, double reference_m, double range_m);

double received_rssi_dbm(double distance_m, double shadow_db, const CoverageParams& params);
bool fap_covers(const FapSite& fap, Vec2 p, double shadow_db, const CoverageParams& params);

void to_json(nlohmann::json& j, const Network& net);
void from_json(const nlohmann::json& j, Network& net);

}  // namespace ccuf
