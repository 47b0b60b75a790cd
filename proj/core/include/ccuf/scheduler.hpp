#pragma once

#include <span>
#include <string>
#include <vector>

#include "ccuf/channel.hpp"
#include "ccuf/geometry.hpp"
#include "ccuf/placement.hpp"
#include "ccuf/popularity.hpp"

namespace ccuf {

enum class Scheme { kST, kJT, kPT, kUavServe };

std::string to_string(Scheme s);

struct SchemeInputs {
  bool indoor = false;
  ContentClass content = ContentClass::kPopular;
  Region region = Region::kCellCore;
  double speed_mps = 0.0;
  double speed_threshold_mps = 1.5;
  /// Zero speed over the last two slots.
  bool stationary = false;
};

/// Transmission scheme for a FAP-served request.
Scheme select_fap_scheme(ContentClass content, Region region, bool stationary);
Scheme select_scheme(const SchemeInputs& in);

struct RequestOutcome {
  Scheme scheme = Scheme::kST;
  std::vector<int> served_by;
  bool hit = false;
  double delay_s = 0.0;
  double energy_uav_j = 0.0;
  bool handover = false;
};

/// B log2(1 + sinr), bit/s.
double shannon_rate(double sinr, double bandwidth_hz);
/// size / rate. `size_bits` and `bandwidth_hz` share a unit base.
double transfer_delay(double size_bits, double sinr, double bandwidth_hz);

double fap_delay(bool hit, double sinr, double size_bits, double bandwidth_hz, double miss_penalty_s);
double uav_delay(bool hit, double user_sinr, double server_sinr, double size_bits, double bandwidth_hz);
/// p_h D_h + (1 - p_h) D_m with p_h the cached probability mass.
double expected_uav_delay(const UavCacheSelection& cache, const ZipfProfile& profile, double hit_delay_s,
                          double miss_delay_s);

struct EnergyParams {
  double tx_w_per_mb = 0.5;
  double rx_w_per_mb = 0.25;
  double pause_s = 1.0;
  double flyby_s = 2.0;
  double hover_los_w = 0.1;
  double hover_nlos_w = 0.2;

  /// Throws std::invalid_argument naming the offending field.
  void validate() const;
};

/// L P_T tau_p + L P_R tau_p + P_j (tau_f - tau_p).
double uav_energy_step(double size_mb, const EnergyParams& params, bool los);

class UavBattery {
 public:
  explicit UavBattery(double capacity_j = 0.0) : remaining_(capacity_j) {}

  double remaining() const { return remaining_; }
  double drawn() const { return drawn_; }
  bool depleted() const { return depleted_; }
  /// Deducts `joules` if the battery can supply it. Otherwise marks the UAV depleted and returns false.
  bool draw(double joules);

 private:
  double remaining_;
  double drawn_ = 0.0;
  bool depleted_ = false;
};

/// Straight path sampled at its two endpoints.
std::vector<Vec2> straight_trajectory(Vec2 start, double heading_rad, double speed_mps, double window_s);

/// True iff some point of the (piecewise linear) trajectory leaves the disc of radius `range_m`.
bool detect_handover(std::span<const Vec2> trajectory, Vec2 fap_position, double range_m);
bool detect_handover(std::span<const Vec2> trajectory, const FapSite& fap);

}  // namespace ccuf
