#include "ccuf/scheduler.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace ccuf {

std::string to_string(Scheme s) {
  switch (s) {
    case Scheme::kST: return "ST";
    case Scheme::kJT: return "JT";
    case Scheme::kPT: return "PT";
    case Scheme::kUavServe: return "UAV";
  }
  return "unknown";
}

Scheme select_fap_scheme(ContentClass content, Region region, bool stationary) {
  switch (content) {
    case ContentClass::kPopular: return region == Region::kCellEdge ? Scheme::kJT : Scheme::kST;
    case ContentClass::kMediocre: return stationary ? Scheme::kPT : Scheme::kST;
    case ContentClass::kNonPopular: return Scheme::kST;
  }
  return Scheme::kST;
}

Scheme select_scheme(const SchemeInputs& in) {
  if (!in.indoor && in.speed_mps >= in.speed_threshold_mps) return Scheme::kUavServe;
  return select_fap_scheme(in.content, in.region, in.stationary);
}

double shannon_rate(double sinr, double bandwidth_hz) {
  if (!(sinr > 0.0)) throw std::invalid_argument("shannon_rate: sinr must be > 0");
  if (!(bandwidth_hz > 0.0)) throw std::invalid_argument("shannon_rate: bandwidth must be > 0");
  return bandwidth_hz * std::log2(1.0 + sinr);
}

double transfer_delay(double size_bits, double sinr, double bandwidth_hz) {
  return size_bits / shannon_rate(sinr, bandwidth_hz);
}

double fap_delay(bool hit, double sinr, double size_bits, double bandwidth_hz, double miss_penalty_s) {
  const double d = transfer_delay(size_bits, sinr, bandwidth_hz);
  return hit ? d : d + miss_penalty_s;
}

double uav_delay(bool hit, double user_sinr, double server_sinr, double size_bits, double bandwidth_hz) {
  const double ug = transfer_delay(size_bits, user_sinr, bandwidth_hz);
  if (hit) return ug;
  return ug + transfer_delay(size_bits, server_sinr, bandwidth_hz);
}

double expected_uav_delay(const UavCacheSelection& cache, const ZipfProfile& profile, double hit_delay_s,
                          double miss_delay_s) {
  double ph = 0.0;
  for (int l : cache.selected) {
    if (l >= 1 && l <= profile.size()) ph += profile.p(l);
  }
  return ph * hit_delay_s + (1.0 - ph) * miss_delay_s;
}

void EnergyParams::validate() const {
  auto nonneg = [](double v, const char* name) {
    if (!(v >= 0.0)) throw std::invalid_argument(std::string("energy.") + name + ": must be >= 0");
  };
  nonneg(tx_w_per_mb, "tx_w_per_mb");
  nonneg(rx_w_per_mb, "rx_w_per_mb");
  nonneg(pause_s, "pause_s");
  nonneg(flyby_s, "flyby_s");
  nonneg(hover_los_w, "hover_los_w");
  nonneg(hover_nlos_w, "hover_nlos_w");
  if (flyby_s < pause_s) throw std::invalid_argument("energy.flyby_s: must be >= pause_s");
}

double uav_energy_step(double size_mb, const EnergyParams& p, bool los) {
  p.validate();
  const double hover = los ? p.hover_los_w : p.hover_nlos_w;
  return size_mb * p.tx_w_per_mb * p.pause_s + size_mb * p.rx_w_per_mb * p.pause_s + hover * (p.flyby_s - p.pause_s);
}

bool UavBattery::draw(double joules) {
  if (depleted_) return false;
  if (joules > remaining_) {
    depleted_ = true;
    return false;
  }
  remaining_ -= joules;
  drawn_ += joules;
  return true;
}

std::vector<Vec2> straight_trajectory(Vec2 start, double heading_rad, double speed_mps, double window_s) {
  const Vec2 end = start + Vec2{std::cos(heading_rad), std::sin(heading_rad)} * (speed_mps * window_s);
  return {start, end};
}

bool detect_handover(std::span<const Vec2> trajectory, Vec2 fap_position, double range_m) {
  const double r2 = range_m * range_m;
  return std::any_of(trajectory.begin(), trajectory.end(),
                     [&](Vec2 p) { return distance2(p, fap_position) > r2; });
}

bool detect_handover(std::span<const Vec2> trajectory, const FapSite& fap) {
  return detect_handover(trajectory, fap.position, fap.range_m);
}

}  // namespace ccuf
