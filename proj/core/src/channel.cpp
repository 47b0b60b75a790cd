#include "ccuf/channel.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace ccuf {

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
double linear_to_db(double x) { return 10.0 * std::log10(x); }
double dbm_to_mw(double dbm) { return db_to_linear(dbm); }
double mw_to_dbm(double mw) { return linear_to_db(mw); }

double reference_path_loss_db(double carrier_hz, double reference_m) {
  return 20.0 * std::log10(4.0 * M_PI * carrier_hz * reference_m / kSpeedOfLight);
}

double ground_path_loss_db(double distance_m, const GroundChannelParams& params, double shadow_db) {
  const double d = std::max(distance_m, params.reference_m);
  return reference_path_loss_db(params.carrier_hz, params.reference_m) +
         10.0 * params.path_loss_exponent * std::log10(d / params.reference_m) + shadow_db;
}

double received_power_mw(const LinkBudget& link) {
  return dbm_to_mw(link.tx_power_dbm - link.path_loss_db) * link.fading;
}

double sinr_linear(double signal_mw, double interference_mw, double noise_dbm) {
  return signal_mw / (interference_mw + dbm_to_mw(noise_dbm));
}

double sinr_linear(std::span<const LinkBudget> signal, std::span<const LinkBudget> interferers, double noise_dbm) {
  double s = 0.0;
  for (const auto& l : signal) s += received_power_mw(l);
  double i = 0.0;
  for (const auto& l : interferers) i += received_power_mw(l);
  return sinr_linear(s, i, noise_dbm);
}

double fap_sinr(const FapSite& tx, Vec2 user, double fading, std::span<const LinkBudget> interferers,
                const GroundChannelParams& params, double shadow_db) {
  const LinkBudget signal{tx.tx_power_dbm, ground_path_loss_db(distance(tx.position, user), params, shadow_db), fading};
  return sinr_linear(std::span<const LinkBudget>(&signal, 1), interferers, params.noise_dbm);
}

Region classify_region(double mean_sinr_db, double threshold_db) {
  return mean_sinr_db > threshold_db ? Region::kCellCore : Region::kCellEdge;
}

Region classify_region(std::span<const double> window_db, double threshold_db) {
  if (window_db.empty()) throw std::invalid_argument("classify_region: empty SINR window");
  const double mean = std::accumulate(window_db.begin(), window_db.end(), 0.0) / static_cast<double>(window_db.size());
  return classify_region(mean, threshold_db);
}

double slant_distance(const AerialNode& node, Vec2 user) {
  return std::hypot(distance(node.position, user), node.altitude_m);
}

double elevation_deg(const AerialNode& node, Vec2 user) {
  const double d = slant_distance(node, user);
  if (!(d > 0.0)) return 90.0;
  return std::asin(std::clamp(node.altitude_m / d, -1.0, 1.0)) * 180.0 / M_PI;
}

double los_probability_at(double elevation, const AirChannelParams& params) {
  return 1.0 / (1.0 + params.s_curve_a * std::exp(-params.s_curve_b * (elevation - params.s_curve_a)));
}

double los_probability(const AerialNode& node, Vec2 user, const AirChannelParams& params) {
  return los_probability_at(elevation_deg(node, user), params);
}

double los_probability(const UavSite& uav, Vec2 user, const AirChannelParams& params) {
  return los_probability(aerial(uav), user, params);
}

double air_ground_path_loss_db(double slant_m, bool los, const AirChannelParams& params) {
  const double d = std::max(slant_m, params.reference_m);
  const double eta = los ? params.los_exponent : params.nlos_exponent;
  return reference_path_loss_db(params.carrier_hz, params.reference_m) + 10.0 * eta * std::log10(d / params.reference_m);
}

double air_ground_avg_path_loss(const AerialNode& node, Vec2 user, const AirChannelParams& params) {
  const double d = slant_distance(node, user);
  const double p = los_probability(node, user, params);
  return p * air_ground_path_loss_db(d, true, params) + (1.0 - p) * air_ground_path_loss_db(d, false, params);
}

double air_ground_avg_path_loss(const UavSite& uav, Vec2 user, const AirChannelParams& params) {
  return air_ground_avg_path_loss(aerial(uav), user, params);
}

double server_uav_avg_path_loss(double distance_m, double p_los, const AirChannelParams& params) {
  const double los = std::pow(distance_m, -params.server_exponent);
  const double nlos = params.server_link_literal ? params.server_nlos_penalty * los : los / params.server_nlos_penalty;
  return p_los * los + (1.0 - p_los) * nlos;
}

double rayleigh_gain(Rng& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  const double re = n(rng);
  const double im = n(rng);
  return (re * re + im * im) / 2.0;
}

}  // namespace ccuf
