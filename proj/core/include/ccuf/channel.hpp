#pragma once

#include <span>

#include "ccuf/geometry.hpp"
#include "ccuf/network.hpp"
#include "ccuf/rng.hpp"

namespace ccuf {

inline constexpr double kSpeedOfLight = 3.0e8;

double db_to_linear(double db);
double linear_to_db(double x);
double dbm_to_mw(double dbm);
double mw_to_dbm(double mw);

struct GroundChannelParams {
  double path_loss_exponent = 3.0;
  double shadowing_db = 3.0;
  double carrier_hz = 2.4e9;
  double reference_m = 1.0;
  double noise_dbm = -94.0;
};

struct AirChannelParams {
  double los_exponent = 2.5;
  double nlos_exponent = 3.0;
  double los_shadowing_db = 3.5;
  double nlos_shadowing_db = 3.0;
  double s_curve_a = 9.61;
  double s_curve_b = 0.16;
  double server_exponent = 2.0;
  double server_nlos_penalty = 20.0;
  // Multiply the NLoS server-link gain by the penalty instead of dividing by it.
  bool server_link_literal = false;
  double carrier_hz = 2.4e9;
  double reference_m = 1.0;
};

/// Free-space loss at the reference distance, 20 log10(4 pi f_c d_0 / c).
double reference_path_loss_db(double carrier_hz, double reference_m);

double ground_path_loss_db(double distance_m, const GroundChannelParams& params, double shadow_db = 0.0);

/// A transmitter as seen by one receiver.
struct LinkBudget {
  double tx_power_dbm = 0.0;
  double path_loss_db = 0.0;
  double fading = 1.0;
};

double received_power_mw(const LinkBudget& link);

/// SINR (linear) of `signal` against the summed received power of `interferers` plus noise.
double sinr_linear(std::span<const LinkBudget> signal, std::span<const LinkBudget> interferers, double noise_dbm);
double sinr_linear(double signal_mw, double interference_mw, double noise_dbm);

/// SINR from FAP `tx` at `user`, with interfering links already budgeted.
double fap_sinr(const FapSite& tx, Vec2 user, double fading, std::span<const LinkBudget> interferers,
                const GroundChannelParams& params, double shadow_db = 0.0);

enum class Region { kCellCore, kCellEdge };

/// Core iff the averaged SINR strictly exceeds the threshold.
Region classify_region(double mean_sinr_db, double threshold_db);
/// Averages the window (in dB) and classifies; throws on an empty window.
Region classify_region(std::span<const double> window_db, double threshold_db);

/// Aerial transmitter position with altitude.
struct AerialNode {
  Vec2 position;
  double altitude_m = 100.0;
};

inline AerialNode aerial(const UavSite& u) { return {u.position, u.altitude_m}; }

double slant_distance(const AerialNode& node, Vec2 user);
/// Elevation of the node seen from the user, in degrees.
double elevation_deg(const AerialNode& node, Vec2 user);

double los_probability_at(double elevation_deg, const AirChannelParams& params);
double los_probability(const AerialNode& node, Vec2 user, const AirChannelParams& params);
double los_probability(const UavSite& uav, Vec2 user, const AirChannelParams& params);

/// Deterministic LoS or NLoS loss at slant distance `d` (zero-mean shadowing omitted).
double air_ground_path_loss_db(double slant_m, bool los, const AirChannelParams& params);
/// LoS-probability weighted mixture of the two branches.
double air_ground_avg_path_loss(const AerialNode& node, Vec2 user, const AirChannelParams& params);
double air_ground_avg_path_loss(const UavSite& uav, Vec2 user, const AirChannelParams& params);

/// Average linear gain of the server-to-UAV link at distance `d` with LoS probability `p_los`.
double server_uav_avg_path_loss(double distance_m, double p_los, const AirChannelParams& params);

/// |h|^2 for h complex Gaussian with unit variance.
double rayleigh_gain(Rng& rng);

}  // namespace ccuf
