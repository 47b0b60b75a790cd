#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "ccuf/config.hpp"
#include "ccuf/deployment.hpp"
#include "ccuf/scheduler.hpp"

namespace ccuf {

struct ReplicationMetrics {
  double cache_hit_ratio = 0.0;
  double mean_access_delay = 0.0;
  double mean_edge_sinr_db = 0.0;
  double cache_diversity = 0.0;
  double cache_redundancy = 0.0;
  double uav_energy_total = 0.0;
  double handover_probability = 0.0;
  /// Mean per-request UAV delay and energy for outdoor users, and the same requests
  /// re-evaluated as if the user were indoors.
  double uav_delay_outdoor = 0.0;
  double uav_delay_indoor = 0.0;
  double uav_energy_outdoor = 0.0;
  double uav_energy_indoor = 0.0;
  double requests = 0.0;
  double contents_completed = 0.0;
  double uav_requests = 0.0;
  double rejected_requests = 0.0;
  double edge_samples = 0.0;
  double jt_share = 0.0;
};

struct MetricDef {
  const char* name;
  double ReplicationMetrics::*member;
};

/// Column order used by reports.
std::span<const MetricDef> metric_defs();

struct RequestEvent {
  int slot = 0;
  int user = 0;
  int content = 0;
  Scheme scheme = Scheme::kST;
  /// FAP id, or UAV id for UAV service.
  int node = 0;
  bool hit = false;
  double delay_s = 0.0;
  double energy_j = 0.0;
};

struct ClusteringSnapshot {
  int slot = 0;
  std::vector<int> users;
  IntraClustering clustering;
};

struct ReplicationTrace {
  std::vector<RequestEvent> events;
  std::vector<ClusteringSnapshot> snapshots;
};

/// Simulates one replication of a single (already expanded) configuration.
ReplicationMetrics run_replication(const SimConfig& config, int replication, ReplicationTrace* trace = nullptr);

struct PointResult {
  std::vector<std::string> values;
  std::vector<ReplicationMetrics> runs;
  ReplicationMetrics mean;
  ReplicationMetrics ci95;
};

struct MetricsReport {
  std::vector<std::string> axes;
  std::vector<PointResult> points;
};

/// Mean and 95% Student-t half-width over the runs, per metric.
void aggregate(PointResult& point);

struct RunObserver {
  bool want_traces = false;
  /// Called from the calling thread in (point, replication) order.
  std::function<void(std::size_t point, int replication, const ReplicationTrace&)> on_trace;
};

/// Every sweep point times every replication; deterministic for a given config.
MetricsReport run(const SimConfig& config, const RunObserver* observer = nullptr);

/// Text form of a sweep value as it appears in reports.
std::string format_axis_value(const nlohmann::json& v);

}  // namespace ccuf
