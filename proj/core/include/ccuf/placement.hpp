#pragma once

#include <cstdint>
#include <ostream>
#include <span>
#include <vector>

#include "ccuf/network.hpp"
#include "ccuf/popularity.hpp"

namespace ccuf {

struct UavCacheSelection {
  /// Cached ranks (1-based), ascending.
  std::vector<int> selected;
  /// x_l per rank (index l-1); 0 means cached.
  std::vector<std::uint8_t> indicator;

  bool contains(int rank) const {
    return rank >= 1 && rank <= static_cast<int>(indicator.size()) && indicator[static_cast<std::size_t>(rank - 1)] == 0;
  }
};

/// Caches the `capacity` ranks of largest weight, lower rank first on ties.
UavCacheSelection solve_uav_placement(std::span<const double> weights, int capacity);

/// sum_l weight_l * x_l.
double uav_objective(std::span<const double> weights, const UavCacheSelection& selection);

struct FapCacheSelection {
  /// Ranks stored whole, in selection order.
  std::vector<int> popular;
  /// Ranks stored as one segment per FAP, in selection order (row order of the segment matrices).
  std::vector<int> mediocre;
  /// y_l and z_l per rank; 0 means selected.
  std::vector<std::uint8_t> y;
  std::vector<std::uint8_t> z;
  /// Row of each mediocre rank, -1 otherwise.
  std::vector<int> mediocre_row;

  ContentClass class_of(int rank) const;
  int row_of(int rank) const {
    return rank >= 1 && rank <= static_cast<int>(mediocre_row.size()) ? mediocre_row[static_cast<std::size_t>(rank - 1)]
                                                                      : -1;
  }
};

/// Fills the popular budget floor(alpha C_f) then the coded budget N_s (C_f - floor(alpha C_f)) by weight.
FapCacheSelection solve_fap_placement(std::span<const double> weights, double alpha, int cache_capacity, int segments);

/// sum_l w_l y_l + c sum_l w_l z_l with c = 1, or 1/N_s when `segment_weighting`.
double fap_objective(std::span<const double> weights, const FapCacheSelection& selection, int segments,
                     bool segment_weighting = false);

/// One FAP's Z matrix: rows are mediocre contents, columns segments; one nonzero per row.
class SegmentMatrix {
 public:
  SegmentMatrix() = default;
  SegmentMatrix(int rows, int segments) : rows_(rows), cols_(segments), segment_(static_cast<std::size_t>(rows), -1) {}

  int rows() const { return rows_; }
  int segments() const { return cols_; }
  /// 0-based segment held for row `row`.
  int segment(int row) const { return segment_.at(static_cast<std::size_t>(row)); }
  void set(int row, int segment);
  std::uint8_t at(int row, int col) const { return segment(row) == col ? 1 : 0; }
  /// z_l^(a) . z_l^(b)^T
  friend int row_dot(const SegmentMatrix& a, const SegmentMatrix& b, int row);
  friend bool operator==(const SegmentMatrix&, const SegmentMatrix&) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<int> segment_;
};

/// Cyclic Latin-square assignment: member i holds segment ((i + l) mod N_s) of row l.
std::vector<SegmentMatrix> assign_segments(std::span<const int> cluster, int mediocre_count, int segments);

/// w^2 + wz + z^2.
int reuse_offset(int w, int z);

/// Copies one cluster's matrices to every FAP. In hex layout the FAP with (w, z) reuse label m
/// receives the matrix of the source-cluster member with label m; otherwise members receive the
/// matrix of equal intra-cluster index. Result is indexed by FAP id.
std::vector<SegmentMatrix> replicate_across_clusters(const Network& net, int source_cluster,
                                                     std::span<const SegmentMatrix> matrices, int w, int z);

struct Placement {
  FapCacheSelection selection;
  std::vector<SegmentMatrix> per_fap;
  int segments = 1;

  /// 0-based segment of `rank` at `fap`, -1 when the FAP holds no segment of it.
  int segment_at(int fap, int rank) const;
};

Placement build_placement(const Network& net, FapCacheSelection selection, int segments, int w, int z);

double kappa(double alpha, int cache_capacity, int segments);
double cache_diversity(double alpha, int cache_capacity, int segments);
double cache_redundancy(double alpha, int cache_capacity, int segments);
double beta_max(double alpha, int segments);

struct ClusterStorage {
  /// Storage units (one whole content each; a segment is 1/N_s) summed over the cluster.
  double total_units = 0.0;
  /// Units that duplicate another stored item of the same cluster.
  double duplicate_units = 0.0;
  /// Units stored exactly once in the cluster and belonging to coded contents.
  double coded_units = 0.0;
  /// Distinct contents retrievable from the cluster.
  int distinct_contents = 0;
  /// The same quantities counted in segments.
  long long total_segments = 0;
  long long duplicate_segments = 0;
  long long coded_segments = 0;

  double redundancy() const {
    return total_segments > 0 ? static_cast<double>(duplicate_segments) / static_cast<double>(total_segments) : 0.0;
  }
  double diversity() const {
    return total_segments > 0 ? static_cast<double>(coded_segments) / static_cast<double>(total_segments) : 0.0;
  }
};

/// Counts stored items in one inter-cluster.
ClusterStorage measure_cluster(const Placement& placement, const Network& net, int cluster);
double cache_redundancy(const Placement& placement, const Network& net, int cluster);

/// Rows: fap_id, content_id, segment_id (1-based) or FULL.
void write_placement_csv(std::ostream& out, const Placement& placement, const Network& net);

}  // namespace ccuf
