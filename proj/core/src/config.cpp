#include "ccuf/config.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

namespace ccuf {

using nlohmann::json;

std::string to_string(Routing r) { return r == Routing::kSpeed ? "speed" : "share"; }

Routing routing_from_string(const std::string& name) {
  if (name == "speed") return Routing::kSpeed;
  if (name == "share") return Routing::kShare;
  throw ConfigError("scheduler.routing: unknown value '" + name + "' (expected speed or share)");
}

double SimConfig::slot_seconds() const {
  return scheduler.slot_s > 0.0 ? scheduler.slot_s : topology.fap_range_m / scheduler.speed_threshold_mps;
}

double SimConfig::server_tx_power_dbm() const {
  return std::isnan(radio.server_tx_power_dbm) ? topology.uav_tx_power_dbm : radio.server_tx_power_dbm;
}

SimConfig default_config(const std::string& profile) {
  SimConfig c;
  c.profile = profile;
  if (profile == "desk") return c;
  if (profile != "paper") throw ConfigError("profile: unknown profile '" + profile + "' (expected desk or paper)");
  c.users = 500;
  c.topology.fap_count = 175;
  c.topology.uav_count = 10;
  c.topology.region_radius_m = 5000.0;
  c.catalog.catalog_size = 40724;
  c.mobility.hotspots = 10;
  c.mobility.hotspot_sigma_m = 60.0;
  return c;
}

namespace {

// Leaf accessors keyed by dotted path. Each reads the value out of a config or writes one in.
struct Field {
  std::function<json(const SimConfig&)> get;
  std::function<void(SimConfig&, const json&, const std::string&)> set;
};

[[noreturn]] void type_error(const std::string& path, const char* expected) {
  throw ConfigError(path + ": expected " + expected);
}

template <class T>
Field scalar(T SimConfig::*group, auto member) {
  using V = std::remove_cvref_t<decltype(std::declval<T&>().*member)>;
  return {[=](const SimConfig& c) { return json((c.*group).*member); },
          [=](SimConfig& c, const json& v, const std::string& path) {
            V& dst = (c.*group).*member;
            if constexpr (std::is_same_v<V, bool>) {
              if (!v.is_boolean()) type_error(path, "a boolean");
              dst = v.get<bool>();
            } else if constexpr (std::is_integral_v<V>) {
              if (!v.is_number_integer()) type_error(path, "an integer");
              dst = v.get<V>();
            } else {
              if (v.is_null() && std::is_floating_point_v<V>) {
                dst = std::numeric_limits<V>::quiet_NaN();
              } else {
                if (!v.is_number()) type_error(path, "a number");
                dst = v.get<V>();
              }
            }
          }};
}

template <class T>
Field top(T SimConfig::*member) {
  return {[=](const SimConfig& c) { return json(c.*member); },
          [=](SimConfig& c, const json& v, const std::string& path) {
            if constexpr (std::is_same_v<T, std::string>) {
              if (!v.is_string()) type_error(path, "a string");
            } else if constexpr (std::is_unsigned_v<T>) {
              if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0))
                type_error(path, "a non-negative integer");
            } else {
              if (!v.is_number_integer()) type_error(path, "an integer");
            }
            c.*member = v.get<T>();
          }};
}

json nan_to_null(double x) { return std::isnan(x) ? json(nullptr) : json(x); }

const std::map<std::string, Field>& fields() {
  static const std::map<std::string, Field> table = [] {
    std::map<std::string, Field> f;
    f["profile"] = top(&SimConfig::profile);
    f["seed"] = top(&SimConfig::seed);
    f["replications"] = top(&SimConfig::replications);
    f["horizon_slots"] = top(&SimConfig::horizon_slots);
    f["users"] = top(&SimConfig::users);
    f["threads"] = top(&SimConfig::threads);

    using TP = TopologyParams;
    f["topology.layout"] = {[](const SimConfig& c) { return json(to_string(c.topology.layout)); },
                            [](SimConfig& c, const json& v, const std::string& path) {
                              if (!v.is_string()) type_error(path, "a string");
                              try {
                                c.topology.layout = layout_from_string(v.get<std::string>());
                              } catch (const std::invalid_argument& e) {
                                throw ConfigError(path + ": " + e.what());
                              }
                            }};
    f["topology.fap_count"] = scalar(&SimConfig::topology, &TP::fap_count);
    f["topology.cluster_size"] = scalar(&SimConfig::topology, &TP::cluster_size);
    f["topology.region_radius_m"] = scalar(&SimConfig::topology, &TP::region_radius_m);
    f["topology.fap_range_m"] = scalar(&SimConfig::topology, &TP::fap_range_m);
    f["topology.fap_tx_power_dbm"] = scalar(&SimConfig::topology, &TP::fap_tx_power_dbm);
    f["topology.fap_cache_capacity"] = scalar(&SimConfig::topology, &TP::fap_cache_capacity);
    f["topology.uav_count"] = scalar(&SimConfig::topology, &TP::uav_count);
    f["topology.uav_altitude_m"] = scalar(&SimConfig::topology, &TP::uav_altitude_m);
    f["topology.uav_tx_power_dbm"] = scalar(&SimConfig::topology, &TP::uav_tx_power_dbm);
    f["topology.uav_range_m"] = scalar(&SimConfig::topology, &TP::uav_range_m);
    f["topology.uav_cache_capacity"] = scalar(&SimConfig::topology, &TP::uav_cache_capacity);
    f["topology.uav_battery_j"] = scalar(&SimConfig::topology, &TP::uav_battery_j);
    f["topology.indoor_fraction"] = scalar(&SimConfig::topology, &TP::indoor_fraction);
    f["topology.building_pitch_m"] = scalar(&SimConfig::topology, &TP::building_pitch_m);
    f["topology.server_position"] = {
        [](const SimConfig& c) {
          const auto& s = c.topology.server_position;
          return json{s.x, s.y, s.z};
        },
        [](SimConfig& c, const json& v, const std::string& path) {
          if (!v.is_array() || v.size() != 3 || !v[0].is_number() || !v[1].is_number() || !v[2].is_number())
            type_error(path, "an array of three numbers");
          c.topology.server_position = {v[0].get<double>(), v[1].get<double>(), v[2].get<double>()};
        }};
    f["topology.indoor_regions"] = {
        [](const SimConfig& c) {
          json out = json::array();
          for (const auto& r : c.topology.indoor_regions) out.push_back({r.x_min, r.y_min, r.x_max, r.y_max});
          return out;
        },
        [](SimConfig& c, const json& v, const std::string& path) {
          if (!v.is_array()) type_error(path, "an array of [x_min, y_min, x_max, y_max] rectangles");
          c.topology.indoor_regions.clear();
          for (const auto& r : v) {
            if (!r.is_array() || r.size() != 4) type_error(path, "an array of [x_min, y_min, x_max, y_max] rectangles");
            for (const auto& x : r) {
              if (!x.is_number()) type_error(path, "numeric rectangle bounds");
            }
            c.topology.indoor_regions.push_back({r[0].get<double>(), r[1].get<double>(), r[2].get<double>(), r[3].get<double>()});
          }
        }};

    using CP = CatalogParams;
    f["catalog.catalog_size"] = scalar(&SimConfig::catalog, &CP::catalog_size);
    f["catalog.gamma"] = scalar(&SimConfig::catalog, &CP::gamma);
    f["catalog.alpha"] = scalar(&SimConfig::catalog, &CP::alpha);
    f["catalog.segments"] = scalar(&SimConfig::catalog, &CP::segments);
    f["catalog.file_size_mb"] = scalar(&SimConfig::catalog, &CP::file_size_mb);
    f["catalog.dirichlet_concentration"] = scalar(&SimConfig::catalog, &CP::dirichlet_concentration);
    f["catalog.demand_epoch_slots"] = scalar(&SimConfig::catalog, &CP::demand_epoch_slots);
    f["catalog.segment_weighting"] = scalar(&SimConfig::catalog, &CP::segment_weighting);

    using RP = RadioParams;
    f["radio.bandwidth_hz"] = scalar(&SimConfig::radio, &RP::bandwidth_hz);
    f["radio.fap_activity"] = scalar(&SimConfig::radio, &RP::fap_activity);
    f["radio.fading_draws"] = scalar(&SimConfig::radio, &RP::fading_draws);
    f["radio.sinr_window_slots"] = scalar(&SimConfig::radio, &RP::sinr_window_slots);
    f["radio.sinr_threshold_db"] = scalar(&SimConfig::radio, &RP::sinr_threshold_db);
    f["radio.indoor_penetration_db"] = scalar(&SimConfig::radio, &RP::indoor_penetration_db);
    f["radio.server_tx_power_dbm"] = {[](const SimConfig& c) { return nan_to_null(c.radio.server_tx_power_dbm); },
                                      scalar(&SimConfig::radio, &RP::server_tx_power_dbm).set};

    auto ground = [](auto member) {
      return Field{[=](const SimConfig& c) { return json(c.radio.ground.*member); },
                   [=](SimConfig& c, const json& v, const std::string& path) {
                     if (!v.is_number()) type_error(path, "a number");
                     c.radio.ground.*member = v.get<double>();
                   }};
    };
    f["radio.ground.path_loss_exponent"] = ground(&GroundChannelParams::path_loss_exponent);
    f["radio.ground.shadowing_db"] = ground(&GroundChannelParams::shadowing_db);
    f["radio.ground.carrier_hz"] = ground(&GroundChannelParams::carrier_hz);
    f["radio.ground.reference_m"] = ground(&GroundChannelParams::reference_m);
    f["radio.ground.noise_dbm"] = ground(&GroundChannelParams::noise_dbm);

    auto air = [](auto member) {
      using V = std::remove_cvref_t<decltype(std::declval<AirChannelParams&>().*member)>;
      return Field{[=](const SimConfig& c) { return json(c.radio.air.*member); },
                   [=](SimConfig& c, const json& v, const std::string& path) {
                     if constexpr (std::is_same_v<V, bool>) {
                       if (!v.is_boolean()) type_error(path, "a boolean");
                     } else {
                       if (!v.is_number()) type_error(path, "a number");
                     }
                     c.radio.air.*member = v.get<V>();
                   }};
    };
    f["radio.air.los_exponent"] = air(&AirChannelParams::los_exponent);
    f["radio.air.nlos_exponent"] = air(&AirChannelParams::nlos_exponent);
    f["radio.air.los_shadowing_db"] = air(&AirChannelParams::los_shadowing_db);
    f["radio.air.nlos_shadowing_db"] = air(&AirChannelParams::nlos_shadowing_db);
    f["radio.air.s_curve_a"] = air(&AirChannelParams::s_curve_a);
    f["radio.air.s_curve_b"] = air(&AirChannelParams::s_curve_b);
    f["radio.air.server_exponent"] = air(&AirChannelParams::server_exponent);
    f["radio.air.server_nlos_penalty"] = air(&AirChannelParams::server_nlos_penalty);
    f["radio.air.server_link_literal"] = air(&AirChannelParams::server_link_literal);
    f["radio.air.carrier_hz"] = air(&AirChannelParams::carrier_hz);
    f["radio.air.reference_m"] = air(&AirChannelParams::reference_m);

    using SP = SchedulerParams;
    f["scheduler.speed_threshold_mps"] = scalar(&SimConfig::scheduler, &SP::speed_threshold_mps);
    f["scheduler.slot_s"] = scalar(&SimConfig::scheduler, &SP::slot_s);
    f["scheduler.backhaul_penalty_s"] = scalar(&SimConfig::scheduler, &SP::backhaul_penalty_s);
    f["scheduler.routing"] = {[](const SimConfig& c) { return json(to_string(c.scheduler.routing)); },
                              [](SimConfig& c, const json& v, const std::string& path) {
                                if (!v.is_string()) type_error(path, "a string");
                                c.scheduler.routing = routing_from_string(v.get<std::string>());
                              }};
    f["scheduler.uav_share"] = scalar(&SimConfig::scheduler, &SP::uav_share);
    f["scheduler.serve_indoor_by_uav"] = scalar(&SimConfig::scheduler, &SP::serve_indoor_by_uav);
    f["scheduler.reuse_w"] = scalar(&SimConfig::scheduler, &SP::reuse_w);
    f["scheduler.reuse_z"] = scalar(&SimConfig::scheduler, &SP::reuse_z);

    using MP = MobilityParams;
    f["mobility.model"] = {[](const SimConfig& c) { return json(to_string(c.mobility.model)); },
                           [](SimConfig& c, const json& v, const std::string& path) {
                             if (!v.is_string()) type_error(path, "a string");
                             try {
                               c.mobility.model = mobility_from_string(v.get<std::string>());
                             } catch (const std::invalid_argument& e) {
                               throw ConfigError(path + ": " + e.what());
                             }
                           }};
    f["mobility.stationary_fraction"] = scalar(&SimConfig::mobility, &MP::stationary_fraction);
    f["mobility.max_speed_ratio"] = scalar(&SimConfig::mobility, &MP::max_speed_ratio);
    f["mobility.zeta"] = scalar(&SimConfig::mobility, &MP::zeta);
    f["mobility.hotspots"] = scalar(&SimConfig::mobility, &MP::hotspots);
    f["mobility.hotspot_sigma_m"] = scalar(&SimConfig::mobility, &MP::hotspot_sigma_m);

    using DP = DeploymentParams;
    f["deployment.epoch_slots"] = scalar(&SimConfig::deployment, &DP::epoch_slots);
    f["deployment.max_iter"] = scalar(&SimConfig::deployment, &DP::max_iter);
    f["deployment.tol"] = scalar(&SimConfig::deployment, &DP::tol);

    using EC = EnergyConfig;
    f["energy.tx_w_per_mb"] = scalar(&SimConfig::energy, &EC::tx_w_per_mb);
    f["energy.rx_w_per_mb"] = scalar(&SimConfig::energy, &EC::rx_w_per_mb);
    f["energy.hover_los_w"] = scalar(&SimConfig::energy, &EC::hover_los_w);
    f["energy.hover_nlos_w"] = scalar(&SimConfig::energy, &EC::hover_nlos_w);
    return f;
  }();
  return table;
}

json* walk(json& root, const std::string& dotted, bool create) {
  json* node = &root;
  std::stringstream ss(dotted);
  std::string part;
  while (std::getline(ss, part, '.')) {
    if (!node->is_object()) return nullptr;
    if (!node->contains(part)) {
      if (!create) return nullptr;
      (*node)[part] = json::object();
    }
    node = &(*node)[part];
  }
  return node;
}

void apply(SimConfig& c, const json& j, const std::string& prefix) {
  if (!j.is_object()) throw ConfigError((prefix.empty() ? std::string("config") : prefix) + ": expected an object");
  const auto& table = fields();
  for (const auto& [key, value] : j.items()) {
    const std::string path = prefix.empty() ? key : prefix + "." + key;
    if (path == "sweep" || path == "profile") continue;
    if (auto it = table.find(path); it != table.end()) {
      it->second.set(c, value, path);
      continue;
    }
    const std::string group = path + ".";
    const bool is_group = table.lower_bound(group) != table.end() && table.lower_bound(group)->first.starts_with(group);
    if (!is_group) throw ConfigError(path + ": unknown field");
    apply(c, value, path);
  }
}

}  // namespace

void to_json(json& j, const SimConfig& c) {
  j = json::object();
  for (const auto& [path, field] : fields()) *walk(j, path, true) = field.get(c);
  json sweep = json::array();
  for (const auto& axis : c.sweep) sweep.push_back({{"parameter", axis.parameter}, {"values", axis.values}});
  j["sweep"] = std::move(sweep);
}

void from_json(const json& j, SimConfig& c) {
  if (!j.is_object()) throw ConfigError("config: expected a JSON object");
  std::string profile = "desk";
  if (j.contains("profile")) {
    if (!j["profile"].is_string()) type_error("profile", "a string");
    profile = j["profile"].get<std::string>();
  }
  c = default_config(profile);
  apply(c, j, "");
  if (j.contains("sweep")) {
    const auto& s = j["sweep"];
    if (!s.is_array()) type_error("sweep", "an array of {parameter, values}");
    for (std::size_t i = 0; i < s.size(); ++i) {
      const std::string path = "sweep[" + std::to_string(i) + "]";
      const auto& axis = s[i];
      if (!axis.is_object() || !axis.contains("parameter") || !axis.contains("values") ||
          !axis["parameter"].is_string() || !axis["values"].is_array())
        type_error(path, "an object with a string 'parameter' and an array 'values'");
      for (const auto& [k, v] : axis.items()) {
        if (k != "parameter" && k != "values") throw ConfigError(path + "." + k + ": unknown field");
      }
      SweepAxis a;
      a.parameter = axis["parameter"].get<std::string>();
      if (!fields().contains(a.parameter) || a.parameter == "profile")
        throw ConfigError(path + ".parameter: '" + a.parameter + "' is not a sweepable field");
      if (axis["values"].empty()) throw ConfigError(path + ".values: must not be empty");
      for (const auto& v : axis["values"]) a.values.push_back(v);
      c.sweep.push_back(std::move(a));
    }
  }
}

SimConfig parse_config(const json& j) {
  SimConfig c;
  from_json(j, c);
  validate(c);
  return c;
}

SimConfig load_config(const std::string& path, const std::string& profile_override) {
  std::ifstream in(path);
  if (!in) throw ConfigError(path + ": cannot open config file");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError(path + ": " + e.what());
  }
  if (!profile_override.empty()) {
    if (j.contains("profile") && j["profile"] != profile_override)
      throw ConfigError("profile: file requests '" + j["profile"].get<std::string>() + "' but '" + profile_override +
                        "' was given");
    j["profile"] = profile_override;
  }
  return parse_config(j);
}

SimConfig with_parameter(const SimConfig& base, const std::string& dotted, const json& value) {
  if (!fields().contains(dotted)) throw ConfigError(dotted + ": unknown field");
  json j = base;
  *walk(j, dotted, true) = value;
  j["sweep"] = json::array();
  SimConfig out;
  from_json(j, out);
  return out;
}

std::vector<SweepPoint> expand_sweep(const SimConfig& config) {
  SimConfig base = config;
  base.sweep.clear();
  std::vector<SweepPoint> points{{{}, {}, base}};
  for (const auto& axis : config.sweep) {
    std::vector<SweepPoint> next;
    for (const auto& p : points) {
      for (const auto& v : axis.values) {
        SweepPoint q = p;
        q.axes.push_back(axis.parameter);
        q.values.push_back(v);
        try {
          q.config = with_parameter(p.config, axis.parameter, v);
        } catch (const ConfigError& e) {
          throw ConfigError(std::string("sweep value: ") + e.what());
        }
        next.push_back(std::move(q));
      }
    }
    points = std::move(next);
  }
  for (auto& p : points) validate(p.config);
  return points;
}

void validate(const SimConfig& c) {
  auto require = [](bool ok, const std::string& path, const std::string& msg) {
    if (!ok) throw ConfigError(path + ": " + msg);
  };
  require(c.replications >= 1, "replications", "must be >= 1");
  require(c.horizon_slots >= 0, "horizon_slots", "must be >= 0");
  require(c.users >= 0, "users", "must be >= 0");
  require(c.threads >= 0, "threads", "must be >= 0");

  const auto& t = c.topology;
  require(t.cluster_size >= 1, "topology.cluster_size", "must be >= 1");
  require(t.fap_count >= 0, "topology.fap_count", "must be >= 0");
  require(t.fap_count == 0 || t.fap_count >= t.cluster_size, "topology.fap_count", "must be >= topology.cluster_size");
  require(t.layout != Layout::kHex || t.fap_count % t.cluster_size == 0, "topology.fap_count",
          "must be a multiple of topology.cluster_size in hex layout");
  require(t.layout != Layout::kHex || t.cluster_size == 7 || t.cluster_size == 1, "topology.cluster_size",
          "hex layout supports 7-cell flowers (or 1)");
  require(t.region_radius_m > 0, "topology.region_radius_m", "must be > 0");
  require(t.fap_range_m > 0, "topology.fap_range_m", "must be > 0");
  require(t.fap_cache_capacity >= 1, "topology.fap_cache_capacity", "must be >= 1");
  require(t.uav_count >= 0, "topology.uav_count", "must be >= 0");
  require(t.uav_altitude_m > 0, "topology.uav_altitude_m", "must be > 0");
  require(t.uav_range_m > 0, "topology.uav_range_m", "must be > 0");
  require(t.uav_cache_capacity >= 0, "topology.uav_cache_capacity", "must be >= 0");
  require(t.uav_battery_j >= 0, "topology.uav_battery_j", "must be >= 0");
  require(t.indoor_fraction >= 0 && t.indoor_fraction <= 1, "topology.indoor_fraction", "must be in [0, 1]");
  require(t.building_pitch_m > 0, "topology.building_pitch_m", "must be > 0");
  for (const auto& r : t.indoor_regions)
    require(r.x_min <= r.x_max && r.y_min <= r.y_max, "topology.indoor_regions", "rectangle bounds must be ordered");

  const auto& k = c.catalog;
  require(k.catalog_size >= 1, "catalog.catalog_size", "must be >= 1");
  require(k.gamma >= 0 && std::isfinite(k.gamma), "catalog.gamma", "must be >= 0");
  require(k.alpha >= 0 && k.alpha <= 1, "catalog.alpha", "must be in [0, 1]");
  require(k.segments >= 1 && k.segments <= 64, "catalog.segments", "must be in [1, 64]");
  require(t.fap_count == 0 || k.segments == t.cluster_size, "catalog.segments", "must equal topology.cluster_size");
  require(k.file_size_mb > 0, "catalog.file_size_mb", "must be > 0");
  require(k.dirichlet_concentration >= 0, "catalog.dirichlet_concentration", "must be >= 0");
  require(k.demand_epoch_slots >= 1, "catalog.demand_epoch_slots", "must be >= 1");

  const auto& r = c.radio;
  require(r.ground.path_loss_exponent > 0, "radio.ground.path_loss_exponent", "must be > 0");
  require(r.ground.shadowing_db >= 0, "radio.ground.shadowing_db", "must be >= 0");
  require(r.ground.carrier_hz > 0, "radio.ground.carrier_hz", "must be > 0");
  require(r.ground.reference_m > 0, "radio.ground.reference_m", "must be > 0");
  require(r.air.los_exponent > 0, "radio.air.los_exponent", "must be > 0");
  require(r.air.nlos_exponent >= r.air.los_exponent, "radio.air.nlos_exponent", "must be >= radio.air.los_exponent");
  require(r.air.los_shadowing_db >= 0, "radio.air.los_shadowing_db", "must be >= 0");
  require(r.air.nlos_shadowing_db >= 0, "radio.air.nlos_shadowing_db", "must be >= 0");
  require(r.air.server_nlos_penalty >= 1, "radio.air.server_nlos_penalty", "must be >= 1");
  require(r.air.carrier_hz > 0, "radio.air.carrier_hz", "must be > 0");
  require(r.air.reference_m > 0, "radio.air.reference_m", "must be > 0");
  require(r.bandwidth_hz > 0, "radio.bandwidth_hz", "must be > 0");
  require(r.fap_activity >= 0 && r.fap_activity <= 1, "radio.fap_activity", "must be in [0, 1]");
  require(r.fading_draws >= 1, "radio.fading_draws", "must be >= 1");
  require(r.sinr_window_slots >= 1, "radio.sinr_window_slots", "must be >= 1");
  require(r.indoor_penetration_db >= 0, "radio.indoor_penetration_db", "must be >= 0");

  const auto& s = c.scheduler;
  require(s.speed_threshold_mps > 0, "scheduler.speed_threshold_mps", "must be > 0");
  require(s.slot_s >= 0, "scheduler.slot_s", "must be >= 0 (0 selects R_f / speed threshold)");
  require(s.backhaul_penalty_s >= 0, "scheduler.backhaul_penalty_s", "must be >= 0");
  require(s.uav_share >= 0 && s.uav_share <= 1, "scheduler.uav_share", "must be in [0, 1]");
  require(s.reuse_w >= 0 && s.reuse_z >= 0 && s.reuse_w + s.reuse_z > 0, "scheduler.reuse_w",
          "reuse_w and reuse_z must be non-negative and not both zero");
  require(t.layout != Layout::kHex || t.fap_count == 0 ||
              s.reuse_w * s.reuse_w + s.reuse_w * s.reuse_z + s.reuse_z * s.reuse_z == t.cluster_size,
          "scheduler.reuse_w", "reuse index w^2+wz+z^2 must equal topology.cluster_size");

  const auto& m = c.mobility;
  require(m.stationary_fraction >= 0 && m.stationary_fraction <= 1, "mobility.stationary_fraction", "must be in [0, 1]");
  require(m.max_speed_ratio > 0, "mobility.max_speed_ratio", "must be > 0");
  require(m.hotspots >= 1, "mobility.hotspots", "must be >= 1");
  require(m.hotspot_sigma_m > 0, "mobility.hotspot_sigma_m", "must be > 0");

  const auto& d = c.deployment;
  require(d.epoch_slots >= 1, "deployment.epoch_slots", "must be >= 1");
  require(d.max_iter >= 1, "deployment.max_iter", "must be >= 1");
  require(d.tol >= 0, "deployment.tol", "must be >= 0");

  const auto& e = c.energy;
  require(e.tx_w_per_mb >= 0, "energy.tx_w_per_mb", "must be >= 0");
  require(e.rx_w_per_mb >= 0, "energy.rx_w_per_mb", "must be >= 0");
  require(e.hover_los_w >= 0, "energy.hover_los_w", "must be >= 0");
  require(e.hover_nlos_w >= 0, "energy.hover_nlos_w", "must be >= 0");
}

}  // namespace ccuf
