#include "ccuf/simulation.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <limits>
#include <optional>
#include <thread>

#include <boost/math/distributions/students_t.hpp>

#include "ccuf/analytics.hpp"
#include "ccuf/channel.hpp"
#include "ccuf/mobility.hpp"
#include "ccuf/placement.hpp"
#include "ccuf/popularity.hpp"

namespace ccuf {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

constexpr std::array<MetricDef, 17> kMetrics{{
    {"cache_hit_ratio", &ReplicationMetrics::cache_hit_ratio},
    {"mean_access_delay", &ReplicationMetrics::mean_access_delay},
    {"mean_edge_sinr_db", &ReplicationMetrics::mean_edge_sinr_db},
    {"cache_diversity", &ReplicationMetrics::cache_diversity},
    {"cache_redundancy", &ReplicationMetrics::cache_redundancy},
    {"uav_energy_total", &ReplicationMetrics::uav_energy_total},
    {"handover_probability", &ReplicationMetrics::handover_probability},
    {"uav_delay_outdoor", &ReplicationMetrics::uav_delay_outdoor},
    {"uav_delay_indoor", &ReplicationMetrics::uav_delay_indoor},
    {"uav_energy_outdoor", &ReplicationMetrics::uav_energy_outdoor},
    {"uav_energy_indoor", &ReplicationMetrics::uav_energy_indoor},
    {"requests", &ReplicationMetrics::requests},
    {"contents_completed", &ReplicationMetrics::contents_completed},
    {"uav_requests", &ReplicationMetrics::uav_requests},
    {"rejected_requests", &ReplicationMetrics::rejected_requests},
    {"edge_samples", &ReplicationMetrics::edge_samples},
    {"jt_share", &ReplicationMetrics::jt_share},
}};

double ratio(double num, double den) { return den > 0 ? num / den : kNaN; }

struct Mean {
  double sum = 0.0;
  double n = 0.0;
  void add(double x) {
    sum += x;
    n += 1.0;
  }
  double value() const { return ratio(sum, n); }
};

// Fixed-length window of the most recent SINR samples in dB.
class SinrWindow {
 public:
  explicit SinrWindow(int length) : buf_(static_cast<std::size_t>(length), 0.0) {}
  void push(double db) {
    buf_[next_] = db;
    next_ = (next_ + 1) % buf_.size();
    count_ = std::min(count_ + 1, buf_.size());
  }
  std::span<const double> samples() const { return {buf_.data(), count_}; }

 private:
  std::vector<double> buf_;
  std::size_t next_ = 0;
  std::size_t count_ = 0;
};

struct UserSlot {
  GroundUser user;
  double share_key = 0.0;
  int serving = -1;
  int uav = -1;
  bool via_uav = false;
  SinrWindow window;
  Rng mobility;
  Rng requests;
  Rng channel;
  Rng handover;
};

struct UavState {
  AerialNode node;
  UavBattery battery;
  UavCacheSelection cache;
  bool active = false;
};

class Replication {
 public:
  Replication(const SimConfig& cfg, int rep, ReplicationTrace* trace)
      : cfg_(cfg),
        rep_(static_cast<std::uint64_t>(rep)),
        trace_(trace),
        profile_(cfg.catalog.catalog_size, cfg.catalog.gamma) {
    Rng topo = make_stream(cfg.seed, rep_, Stream::kTopology);
    net_ = build_topology(cfg.topology, topo);
    slot_s_ = cfg.slot_seconds();
    seg_mb_ = cfg.catalog.file_size_mb / cfg.catalog.segments;
    seg_bits_ = seg_mb_ * 1e6;
    file_bits_ = cfg.catalog.file_size_mb * 1e6;
    noise_mw_ = dbm_to_mw(cfg.radio.ground.noise_dbm);
    fap_tx_mw_ = dbm_to_mw(cfg.topology.fap_tx_power_dbm);
    uav_tx_mw_ = dbm_to_mw(cfg.topology.uav_tx_power_dbm);
    server_tx_mw_ = dbm_to_mw(cfg.server_tx_power_dbm());
    Rng demand_rng = make_stream(cfg.seed, rep_, Stream::kDemand, 0);
    demand_ = make_demand(profile_, cfg.users, cfg.catalog.dirichlet_concentration, demand_rng);
    for (const auto& u : net_.uavs()) uavs_.push_back({aerial(u), UavBattery(u.battery_j), {}, false});
    init_users();
    fap_active_.assign(net_.faps().size(), false);
  }

  ReplicationMetrics run() {
    for (int t = 0; t < cfg_.horizon_slots; ++t) slot(t);
    return finish();
  }

 private:
  void init_users() {
    Rng rng = make_stream(cfg_.seed, rep_, Stream::kUsers);
    const auto& faps = net_.faps();
    std::vector<Vec2> centres;
    for (int h = 0; h < cfg_.mobility.hotspots; ++h) {
      if (faps.empty()) {
        centres.push_back({});
      } else {
        centres.push_back(faps[std::uniform_int_distribution<std::size_t>(0, faps.size() - 1)(rng)].position);
      }
    }
    std::normal_distribution<double> gauss(0.0, cfg_.mobility.hotspot_sigma_m);
    const double vth = cfg_.scheduler.speed_threshold_mps;
    for (int j = 0; j < cfg_.users; ++j) {
      const auto jj = static_cast<std::uint64_t>(j);
      UserSlot s{GroundUser{},
                 0.0,
                 -1,
                 -1,
                 false,
                 SinrWindow(cfg_.radio.sinr_window_slots),
                 make_stream(cfg_.seed, rep_, Stream::kMobility, jj),
                 make_stream(cfg_.seed, rep_, Stream::kRequests, jj),
                 make_stream(cfg_.seed, rep_, Stream::kChannel, jj),
                 make_stream(cfg_.seed, rep_, Stream::kHandover, jj)};
      s.user.id = j;
      const Vec2 c = centres[std::uniform_int_distribution<std::size_t>(0, centres.size() - 1)(rng)];
      bool placed = false;
      for (int attempt = 0; attempt < 100 && !placed; ++attempt) {
        const Vec2 p = c + Vec2{gauss(rng), gauss(rng)};
        if (faps.empty()) {
          placed = p.norm() <= net_.region_radius();
        } else {
          const int f = net_.nearest_fap(p);
          placed = distance(p, faps[static_cast<std::size_t>(f)].position) <= faps[static_cast<std::size_t>(f)].range_m;
        }
        if (placed) s.user.position = p;
      }
      if (!placed && !faps.empty())
        s.user.position = sample_in_cell(net_, std::uniform_int_distribution<int>(0, static_cast<int>(faps.size()) - 1)(rng), rng);
      const double u_still = uniform01(rng);
      const double u_speed = uniform01(rng);
      s.share_key = uniform01(rng);
      s.user.heading_rad = 2.0 * M_PI * uniform01(rng);
      if (cfg_.mobility.zeta >= 0.0) {
        s.user.speed_mps = cfg_.mobility.zeta * vth;
      } else if (u_still < cfg_.mobility.stationary_fraction) {
        s.user.speed_mps = 0.0;
      } else {
        s.user.speed_mps = cfg_.mobility.max_speed_ratio * vth * (1.0 - u_speed);
      }
      users_.push_back(std::move(s));
    }
  }

  double fap_rx_mw(int fap, Vec2 p, double shadow_db, double fading) const {
    const auto& f = net_.fap(fap);
    return fap_tx_mw_ * fading * db_to_linear(-ground_path_loss_db(distance(f.position, p), cfg_.radio.ground, shadow_db));
  }

  // Mean received power from active FAPs outside `cluster`.
  double outside_interference(Vec2 p, int cluster) const {
    double total = 0.0;
    for (const auto& f : net_.faps()) {
      if (f.cluster_id != cluster && fap_active_[static_cast<std::size_t>(f.id)]) total += fap_rx_mw(f.id, p, 0.0, 1.0);
    }
    return total;
  }

  double uav_interference(Vec2 p, int serving) const {
    double total = 0.0;
    for (std::size_t k = 0; k < uavs_.size(); ++k) {
      if (static_cast<int>(k) == serving || !uavs_[k].active) continue;
      total += uav_tx_mw_ * db_to_linear(-air_ground_avg_path_loss(uavs_[k].node, p, cfg_.radio.air));
    }
    return total;
  }

  double server_sinr(int uav, double interference_mw) const {
    const Vec3 s = net_.server_position();
    const auto& n = uavs_[static_cast<std::size_t>(uav)].node;
    const Vec3 u{n.position.x, n.position.y, n.altitude_m};
    const double d = std::max(distance(s, u), cfg_.radio.air.reference_m);
    const double elev = std::asin(std::clamp((u.z - s.z) / d, -1.0, 1.0)) * 180.0 / M_PI;
    const double gain = server_uav_avg_path_loss(d, los_probability_at(elev, cfg_.radio.air), cfg_.radio.air);
    return server_tx_mw_ * gain / (interference_mw + noise_mw_);
  }

  bool routed_to_uav(const UserSlot& s) const {
    if (uavs_.empty()) return false;
    if (s.user.indoor && !cfg_.scheduler.serve_indoor_by_uav) return false;
    if (cfg_.scheduler.routing == Routing::kSpeed) return s.user.speed_mps >= cfg_.scheduler.speed_threshold_mps;
    return s.share_key < cfg_.scheduler.uav_share;
  }

  void deploy(int t) {
    if (uavs_.empty()) return;
    std::vector<Vec2> pts;
    std::vector<int> ids;
    for (const auto& s : users_) {
      if (!s.user.indoor) {
        pts.push_back(s.user.position);
        ids.push_back(s.user.id);
      }
    }
    if (static_cast<int>(pts.size()) >= static_cast<int>(uavs_.size())) {
      Rng rng = make_stream(cfg_.seed, rep_, Stream::kDeployment, static_cast<std::uint64_t>(t));
      auto c = kmeans_deploy(pts, static_cast<int>(uavs_.size()), net_.region_radius(), rng, cfg_.deployment.max_iter,
                             cfg_.deployment.tol);
      for (std::size_t k = 0; k < uavs_.size(); ++k) uavs_[k].node.position = c.centroids[k];
      if (trace_) trace_->snapshots.push_back({t, ids, std::move(c)});
    }
    for (auto& s : users_) {
      int best = 0;
      for (std::size_t k = 1; k < uavs_.size(); ++k) {
        if (distance2(s.user.position, uavs_[k].node.position) <
            distance2(s.user.position, uavs_[static_cast<std::size_t>(best)].node.position))
          best = static_cast<int>(k);
      }
      s.uav = best;
    }
  }

  void place(int t) {
    const int epoch = t / cfg_.catalog.demand_epoch_slots;
    if (epoch > 0 && cfg_.catalog.dirichlet_concentration > 0.0) {
      Rng rng = make_stream(cfg_.seed, rep_, Stream::kDemand, static_cast<std::uint64_t>(epoch));
      demand_ = make_demand(profile_, cfg_.users, cfg_.catalog.dirichlet_concentration, rng);
    }
    const double bw = cfg_.radio.bandwidth_hz;
    if (!net_.faps().empty()) {
      std::vector<double> delay(users_.size(), 0.0);
      bool any = false;
      for (std::size_t j = 0; j < users_.size(); ++j) {
        const auto& s = users_[j];
        if (routed_to_uav(s)) continue;
        const Vec2 p = s.user.position;
        const int f = net_.nearest_fap(p);
        double interference = 0.0;
        for (const auto& o : net_.faps()) {
          if (o.id != f) interference += cfg_.radio.fap_activity * fap_rx_mw(o.id, p, 0.0, 1.0);
        }
        delay[j] = transfer_delay(file_bits_, fap_rx_mw(f, p, 0.0, 1.0) / (interference + noise_mw_), bw);
        any = true;
      }
      if (!any) std::fill(delay.begin(), delay.end(), 1.0);
      const auto weights = aggregate_demand(demand_, delay);
      auto sel = solve_fap_placement(weights, cfg_.catalog.alpha, cfg_.topology.fap_cache_capacity, cfg_.catalog.segments);
      placement_ = build_placement(net_, std::move(sel), cfg_.catalog.segments, cfg_.scheduler.reuse_w,
                                   cfg_.scheduler.reuse_z);
      if (!storage_) storage_ = measure_cluster(*placement_, net_, 0);
    }
    for (std::size_t k = 0; k < uavs_.size(); ++k) {
      std::vector<double> delay(users_.size(), 0.0);
      bool any = false;
      for (std::size_t j = 0; j < users_.size(); ++j) {
        const auto& s = users_[j];
        if (s.uav != static_cast<int>(k) || !routed_to_uav(s)) continue;
        const double rx = uav_tx_mw_ * db_to_linear(-air_ground_avg_path_loss(uavs_[k].node, s.user.position, cfg_.radio.air));
        delay[j] = transfer_delay(file_bits_, rx / noise_mw_, bw);
        any = true;
      }
      if (!any) std::fill(delay.begin(), delay.end(), 1.0);
      uavs_[k].cache = solve_uav_placement(aggregate_demand(demand_, delay), cfg_.topology.uav_cache_capacity);
    }
  }

  void slot(int t) {
    for (auto& s : users_) {
      s.user.indoor = is_indoor(s.user.position, net_);
      s.serving = net_.nearest_fap(s.user.position);
    }
    if (t % cfg_.deployment.epoch_slots == 0) deploy(t);
    if (t % cfg_.catalog.demand_epoch_slots == 0) place(t);

    Rng activity = make_stream(cfg_.seed, rep_, Stream::kActivity, static_cast<std::uint64_t>(t));
    for (std::size_t f = 0; f < fap_active_.size(); ++f) fap_active_[f] = uniform01(activity) < cfg_.radio.fap_activity;
    for (auto& u : uavs_) u.active = false;
    for (auto& s : users_) {
      s.via_uav = routed_to_uav(s);
      if (s.via_uav && !uavs_[static_cast<std::size_t>(s.uav)].battery.depleted())
        uavs_[static_cast<std::size_t>(s.uav)].active = true;
    }

    for (auto& s : users_) serve(s, t);

    for (auto& s : users_) {
      const double heading = 2.0 * M_PI * uniform01(s.handover);
      if (s.serving < 0 || s.via_uav || s.user.indoor) continue;
      ++handover_slots_;
      const auto path = straight_trajectory(s.user.position, heading, s.user.speed_mps, slot_s_);
      if (detect_handover(path, net_.fap(s.serving))) ++handovers_;
    }
    for (auto& s : users_) step(s.user, cfg_.mobility.model, slot_s_, net_, s.mobility);
  }

  void begin_download(UserSlot& s) {
    auto& d = s.user.download;
    d = DownloadState{demand_.sample(s.user.id, s.requests), 0, cfg_.catalog.segments, 0.0};
    s.user.visited = s.serving >= 0 ? std::uint64_t{1} << net_.fap(s.serving).cluster_index : 0;
  }

  void serve(UserSlot& s, int t) {
    if (!s.user.download.active()) begin_download(s);
    auto& d = s.user.download;
    const int n_b = net_.cluster_size();
    // Effective SINR per slot: 2^(mean log2(1 + SINR)) - 1 over the fast-fading draws.
    std::vector<double> pt(static_cast<std::size_t>(n_b), 0.0);
    const std::vector<int>* members = nullptr;
    double st_sinr = 0.0;
    double jt_sinr = 0.0;
    if (s.serving >= 0) {
      const auto& f = net_.fap(s.serving);
      members = &net_.cluster(f.cluster_id);
      std::normal_distribution<double> shadow(0.0, cfg_.radio.ground.shadowing_db);
      std::vector<double> mean_rx(static_cast<std::size_t>(n_b));
      for (int m = 0; m < n_b; ++m)
        mean_rx[static_cast<std::size_t>(m)] =
            fap_rx_mw((*members)[static_cast<std::size_t>(m)], s.user.position, shadow(s.channel), 1.0);
      const double floor = outside_interference(s.user.position, f.cluster_id) + noise_mw_;
      const int draws = cfg_.radio.fading_draws;
      double st_bits = 0.0;
      double jt_bits = 0.0;
      std::vector<double> pt_bits(static_cast<std::size_t>(n_b), 0.0);
      for (int k = 0; k < draws; ++k) {
        double all = 0.0;
        double intra = 0.0;
        double own = 0.0;
        for (int m = 0; m < n_b; ++m) {
          const double rx = mean_rx[static_cast<std::size_t>(m)] * rayleigh_gain(s.channel);
          all += rx;
          pt_bits[static_cast<std::size_t>(m)] += std::log2(1.0 + rx / floor);
          if (m == f.cluster_index) {
            own = rx;
          } else if (fap_active_[static_cast<std::size_t>((*members)[static_cast<std::size_t>(m)])]) {
            intra += rx;
          }
        }
        st_bits += std::log2(1.0 + own / (intra + floor));
        jt_bits += std::log2(1.0 + all / floor);
      }
      auto effective = [draws](double bits) { return std::exp2(bits / draws) - 1.0; };
      st_sinr = effective(st_bits);
      jt_sinr = effective(jt_bits);
      for (int m = 0; m < n_b; ++m) pt[static_cast<std::size_t>(m)] = effective(pt_bits[static_cast<std::size_t>(m)]);
      s.window.push(linear_to_db(st_sinr));
    }

    RequestEvent ev{t, s.user.id, d.content, Scheme::kST, s.serving, false, 0.0, 0.0};
    if (s.via_uav) {
      serve_uav(s, ev);
    } else if (s.serving >= 0) {
      serve_fap(s, ev, pt, *members, st_sinr, jt_sinr);
    } else {
      return;
    }
    d.delay_s += ev.delay_s;
    if (trace_) trace_->events.push_back(ev);
    if (d.complete()) {
      delay_.add(d.delay_s);
      d = DownloadState{};
    }
  }

  void serve_fap(UserSlot& s, RequestEvent& ev, const std::vector<double>& pt_sinr, const std::vector<int>& members,
                 double st_sinr, double jt_sinr) {
    auto& d = s.user.download;
    const double bw = cfg_.radio.bandwidth_hz;
    const double penalty = cfg_.scheduler.backhaul_penalty_s;
    const Region region = classify_region(s.window.samples(), cfg_.radio.sinr_threshold_db);
    const ContentClass cls = placement_->selection.class_of(d.content);
    const bool still = s.user.stationary();
    const Scheme scheme = select_scheme({s.user.indoor, cls, region, s.user.speed_mps,
                                         cfg_.scheduler.speed_threshold_mps, still});
    ev.scheme = scheme;
    ++fap_requests_;
    ++requests_;
    if (scheme == Scheme::kJT) ++jt_requests_;

    switch (scheme) {
      case Scheme::kST:
      case Scheme::kJT: {
        const double sinr = scheme == Scheme::kJT ? jt_sinr : st_sinr;
        if (cls == ContentClass::kPopular) {
          const int k = still ? d.segments - d.held_count() : 1;
          for (int i = 0; i < k; ++i) d.add(d.lowest_missing());
          ev.hit = true;
          ev.delay_s = k * transfer_delay(seg_bits_, sinr, bw);
        } else if (cls == ContentClass::kMediocre) {
          const int seg = placement_->segment_at(s.serving, d.content);
          ev.hit = seg >= 0 && !d.has(seg);
          d.add(ev.hit ? seg : d.lowest_missing());
          ev.delay_s = fap_delay(ev.hit, sinr, seg_bits_, bw, penalty);
        } else {
          d.add(d.lowest_missing());
          ev.delay_s = fap_delay(false, sinr, seg_bits_, bw, penalty);
        }
        break;
      }
      case Scheme::kPT: {
        double worst = 0.0;
        int delivered = 0;
        for (std::size_t m = 0; m < members.size(); ++m) {
          const int seg = placement_->segment_at(members[m], d.content);
          if (seg < 0 || d.has(seg)) continue;
          d.add(seg);
          ++delivered;
          worst = std::max(worst, transfer_delay(seg_bits_, pt_sinr[m], bw));
        }
        ev.hit = delivered > 0;
        ev.delay_s = worst;
        if (!d.complete()) {
          d.add(d.lowest_missing());
          ev.delay_s = std::max(ev.delay_s, fap_delay(false, st_sinr, seg_bits_, bw, penalty));
        }
        break;
      }
      case Scheme::kUavServe: break;
    }
    if (ev.hit) ++hits_;
    if (region == Region::kCellEdge) edge_sinr_.add(linear_to_db(scheme == Scheme::kJT ? jt_sinr : st_sinr));
  }

  EnergyParams energy_params(double delay_s) const {
    EnergyParams e;
    e.tx_w_per_mb = cfg_.energy.tx_w_per_mb;
    e.rx_w_per_mb = cfg_.energy.rx_w_per_mb;
    e.hover_los_w = cfg_.energy.hover_los_w;
    e.hover_nlos_w = cfg_.energy.hover_nlos_w;
    e.pause_s = delay_s;
    e.flyby_s = std::max(slot_s_, delay_s);
    return e;
  }

  void serve_uav(UserSlot& s, RequestEvent& ev) {
    auto& d = s.user.download;
    auto& uav = uavs_[static_cast<std::size_t>(s.uav)];
    const double bw = cfg_.radio.bandwidth_hz;
    ev.scheme = Scheme::kUavServe;
    ev.node = s.uav;
    ++uav_requests_;
    ++requests_;
    if (uav.battery.depleted()) {
      ++rejected_;
      return;
    }
    const bool hit = uav.cache.contains(d.content);
    const Vec2 p = s.user.position;
    const double interference = uav_interference(p, s.uav);
    const double mu = server_sinr(s.uav, interference);
    const double slant = slant_distance(uav.node, p);
    const double p_los = los_probability(uav.node, p, cfg_.radio.air);

    const double indoor_loss = air_ground_path_loss_db(slant, false, cfg_.radio.air) + cfg_.radio.indoor_penetration_db;
    const double indoor_sinr = uav_tx_mw_ * db_to_linear(-indoor_loss) / (interference + noise_mw_);
    const double indoor_delay = uav_delay(hit, indoor_sinr, mu, seg_bits_, bw);
    const double indoor_energy = uav_energy_step(seg_mb_, energy_params(indoor_delay), false);

    double delay = indoor_delay;
    double energy = indoor_energy;
    if (!s.user.indoor) {
      const double outdoor_sinr =
          uav_tx_mw_ * db_to_linear(-air_ground_avg_path_loss(uav.node, p, cfg_.radio.air)) / (interference + noise_mw_);
      delay = uav_delay(hit, outdoor_sinr, mu, seg_bits_, bw);
      const EnergyParams e = energy_params(delay);
      energy = p_los * uav_energy_step(seg_mb_, e, true) + (1.0 - p_los) * uav_energy_step(seg_mb_, e, false);
    }
    if (!uav.battery.draw(energy)) {
      ++rejected_;
      return;
    }
    uav_energy_ += energy;
    if (!s.user.indoor) {
      uav_delay_out_.add(delay);
      uav_delay_in_.add(indoor_delay);
      uav_energy_out_.add(energy);
      uav_energy_in_.add(indoor_energy);
    }
    d.add(d.lowest_missing());
    ev.hit = hit;
    ev.delay_s = delay;
    ev.energy_j = energy;
    hits_ += hit ? 1 : 0;
  }

  ReplicationMetrics finish() const {
    ReplicationMetrics m;
    m.cache_hit_ratio = ratio(hits_, requests_);
    m.mean_access_delay = delay_.value();
    m.mean_edge_sinr_db = edge_sinr_.value();
    m.cache_diversity = storage_ ? storage_->diversity() : kNaN;
    m.cache_redundancy = storage_ ? storage_->redundancy() : kNaN;
    m.uav_energy_total = uav_energy_;
    m.handover_probability = handover_slots_ > 0 ? static_cast<double>(handovers_) / handover_slots_ : 0.0;
    m.uav_delay_outdoor = uav_delay_out_.value();
    m.uav_delay_indoor = uav_delay_in_.value();
    m.uav_energy_outdoor = uav_energy_out_.value();
    m.uav_energy_indoor = uav_energy_in_.value();
    m.requests = requests_;
    m.contents_completed = delay_.n;
    m.uav_requests = uav_requests_;
    m.rejected_requests = rejected_;
    m.edge_samples = edge_sinr_.n;
    m.jt_share = ratio(jt_requests_, fap_requests_);
    return m;
  }

  const SimConfig& cfg_;
  std::uint64_t rep_;
  ReplicationTrace* trace_;
  ZipfProfile profile_;
  Network net_;
  UserDemand demand_;
  std::vector<UserSlot> users_;
  std::vector<UavState> uavs_;
  std::vector<bool> fap_active_;
  std::optional<Placement> placement_;
  std::optional<ClusterStorage> storage_;
  double slot_s_ = 0.0;
  double seg_mb_ = 0.0;
  double seg_bits_ = 0.0;
  double file_bits_ = 0.0;
  double noise_mw_ = 0.0;
  double fap_tx_mw_ = 0.0;
  double uav_tx_mw_ = 0.0;
  double server_tx_mw_ = 0.0;

  double requests_ = 0.0;
  double hits_ = 0.0;
  double fap_requests_ = 0.0;
  double jt_requests_ = 0.0;
  double uav_requests_ = 0.0;
  double rejected_ = 0.0;
  double uav_energy_ = 0.0;
  long long handovers_ = 0;
  long long handover_slots_ = 0;
  Mean delay_;
  Mean edge_sinr_;
  Mean uav_delay_out_;
  Mean uav_delay_in_;
  Mean uav_energy_out_;
  Mean uav_energy_in_;
};

}  // namespace

std::span<const MetricDef> metric_defs() { return kMetrics; }

ReplicationMetrics run_replication(const SimConfig& config, int replication, ReplicationTrace* trace) {
  validate(config);
  Replication r(config, replication, trace);
  return r.run();
}

void aggregate(PointResult& point) {
  const auto n = point.runs.size();
  for (const auto& def : kMetrics) {
    double sum = 0.0;
    for (const auto& r : point.runs) sum += r.*def.member;
    const double mean = n > 0 ? sum / static_cast<double>(n) : kNaN;
    double ci = 0.0;
    if (n >= 2) {
      double ss = 0.0;
      for (const auto& r : point.runs) ss += (r.*def.member - mean) * (r.*def.member - mean);
      const double sd = std::sqrt(ss / static_cast<double>(n - 1));
      const boost::math::students_t dist(static_cast<double>(n - 1));
      ci = boost::math::quantile(boost::math::complement(dist, 0.025)) * sd / std::sqrt(static_cast<double>(n));
    }
    if (std::isnan(mean)) ci = kNaN;
    point.mean.*def.member = mean;
    point.ci95.*def.member = ci;
  }
}

std::string format_axis_value(const nlohmann::json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

MetricsReport run(const SimConfig& config, const RunObserver* observer) {
  validate(config);
  const auto points = expand_sweep(config);
  MetricsReport report;
  for (const auto& axis : config.sweep) report.axes.push_back(axis.parameter);
  if (config.horizon_slots == 0) return report;

  struct Task {
    std::size_t point;
    int replication;
    ReplicationMetrics metrics;
    ReplicationTrace trace;
  };
  std::vector<Task> tasks;
  for (std::size_t p = 0; p < points.size(); ++p) {
    for (int r = 0; r < points[p].config.replications; ++r) tasks.push_back({p, r, {}, {}});
  }
  const bool traces = observer != nullptr && observer->want_traces;
  unsigned workers = config.threads > 0 ? static_cast<unsigned>(config.threads) : std::thread::hardware_concurrency();
  workers = std::clamp<unsigned>(workers, 1U, static_cast<unsigned>(std::max<std::size_t>(tasks.size(), 1)));

  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(workers);
  auto work = [&](unsigned id) {
    try {
      for (std::size_t i = next++; i < tasks.size(); i = next++) {
        auto& task = tasks[i];
        task.metrics = run_replication(points[task.point].config, task.replication, traces ? &task.trace : nullptr);
      }
    } catch (...) {
      errors[id] = std::current_exception();
      next = tasks.size();
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  report.points.resize(points.size());
  for (std::size_t p = 0; p < points.size(); ++p) {
    for (const auto& v : points[p].values) report.points[p].values.push_back(format_axis_value(v));
  }
  for (auto& task : tasks) {
    report.points[task.point].runs.push_back(task.metrics);
    if (traces && observer->on_trace) observer->on_trace(task.point, task.replication, task.trace);
  }
  for (auto& p : report.points) aggregate(p);
  return report;
}

}  // namespace ccuf
