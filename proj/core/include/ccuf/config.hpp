#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ccuf/channel.hpp"
#include "ccuf/mobility.hpp"
#include "ccuf/network.hpp"
#include "ccuf/scheduler.hpp"

namespace ccuf {

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct CatalogParams {
  int catalog_size = 500;
  double gamma = 0.6;
  double alpha = 0.3;
  int segments = 7;
  double file_size_mb = 300.0;
  /// Per-content Dirichlet concentration for user demand; 0 gives identical users.
  double dirichlet_concentration = 0.0;
  int demand_epoch_slots = 100;
  bool segment_weighting = false;
};

struct RadioParams {
  GroundChannelParams ground;
  AirChannelParams air;
  double bandwidth_hz = 20.0e6;
  /// Probability that a FAP outside the serving set transmits in a slot.
  double fap_activity = 0.5;
  /// Fast-fading draws per link per slot; the slot rate is the mean Shannon rate over them.
  int fading_draws = 8;
  int sinr_window_slots = 20;
  double sinr_threshold_db = 18.0;
  double indoor_penetration_db = 20.0;
  /// Server transmit power; NaN means the UAV transmit power.
  double server_tx_power_dbm = std::numeric_limits<double>::quiet_NaN();
};

enum class Routing {
  /// Outdoor users at or above the speed threshold go to UAVs.
  kSpeed,
  /// A fixed share of outdoor users goes to UAVs.
  kShare,
};

std::string to_string(Routing r);
Routing routing_from_string(const std::string& name);

struct SchedulerParams {
  double speed_threshold_mps = 1.5;
  /// Slot length; 0 means R_f divided by the speed threshold.
  double slot_s = 0.0;
  double backhaul_penalty_s = 0.05;
  Routing routing = Routing::kSpeed;
  double uav_share = 1.0;
  bool serve_indoor_by_uav = false;
  int reuse_w = 2;
  int reuse_z = 1;
};

struct MobilityParams {
  MobilityModel model = MobilityModel::kRandomWalk;
  double stationary_fraction = 0.05;
  /// Moving users draw speeds uniformly in (0, max_speed_ratio * threshold].
  double max_speed_ratio = 2.0;
  /// When set (>= 0), every user moves at zeta times the speed threshold.
  double zeta = -1.0;
  int hotspots = 4;
  double hotspot_sigma_m = 40.0;
};

struct DeploymentParams {
  int epoch_slots = 50;
  int max_iter = 100;
  double tol = 1e-6;
};

struct EnergyConfig {
  double tx_w_per_mb = 0.5;
  double rx_w_per_mb = 0.25;
  double hover_los_w = 0.1;
  double hover_nlos_w = 0.2;
};

struct SweepAxis {
  /// Dotted path into the config, e.g. "catalog.alpha".
  std::string parameter;
  std::vector<nlohmann::json> values;
};

struct SimConfig {
  std::string profile = "desk";
  std::uint64_t seed = 0;
  int replications = 10;
  int horizon_slots = 500;
  int users = 100;
  /// Worker threads; 0 uses the hardware concurrency.
  int threads = 0;
  TopologyParams topology;
  CatalogParams catalog;
  RadioParams radio;
  SchedulerParams scheduler;
  MobilityParams mobility;
  DeploymentParams deployment;
  EnergyConfig energy;
  std::vector<SweepAxis> sweep;

  double slot_seconds() const;
  double server_tx_power_dbm() const;
};

/// Defaults for a named scale profile ("desk" or "paper").
SimConfig default_config(const std::string& profile = "desk");

/// Field-level validation; throws ConfigError naming the field.
void validate(const SimConfig& config);

void to_json(nlohmann::json& j, const SimConfig& c);
/// Starts from the profile named in `j` (default desk) and overrides the given fields.
/// Unknown keys are rejected.
void from_json(const nlohmann::json& j, SimConfig& c);

SimConfig load_config(const std::string& path, const std::string& profile_override = "");
SimConfig parse_config(const nlohmann::json& j);

/// Returns a copy with `dotted` (e.g. "catalog.alpha") set to `value`.
SimConfig with_parameter(const SimConfig& base, const std::string& dotted, const nlohmann::json& value);

struct SweepPoint {
  std::vector<std::string> axes;
  std::vector<nlohmann::json> values;
  SimConfig config;
};

/// Cross product of the sweep axes; a config without axes yields one point.
std::vector<SweepPoint> expand_sweep(const SimConfig& config);

}  // namespace ccuf
