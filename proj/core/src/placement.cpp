#include "ccuf/placement.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include <spdlog/spdlog.h>

namespace ccuf {

namespace {

void check_weights(std::span<const double> weights) {
  for (double w : weights) {
    if (!(w >= 0.0)) throw std::invalid_argument("placement: weights must be non-negative");
  }
}

// Ranks ordered by weight descending, lower rank first on ties.
std::vector<int> by_weight(std::span<const double> weights) {
  std::vector<int> order(weights.size());
  std::iota(order.begin(), order.end(), 1);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return weights[static_cast<std::size_t>(a - 1)] > weights[static_cast<std::size_t>(b - 1)];
  });
  return order;
}

}  // namespace

UavCacheSelection solve_uav_placement(std::span<const double> weights, int capacity) {
  check_weights(weights);
  if (capacity < 0) throw std::invalid_argument("solve_uav_placement: capacity must be >= 0");
  const auto n = static_cast<int>(weights.size());
  const int take = std::min(capacity, n);
  const auto order = by_weight(weights);
  UavCacheSelection out;
  out.indicator.assign(weights.size(), 1);
  out.selected.assign(order.begin(), order.begin() + take);
  std::sort(out.selected.begin(), out.selected.end());
  for (int l : out.selected) out.indicator[static_cast<std::size_t>(l - 1)] = 0;
  return out;
}

double uav_objective(std::span<const double> weights, const UavCacheSelection& selection) {
  double total = 0.0;
  for (std::size_t l = 0; l < weights.size(); ++l) total += weights[l] * selection.indicator.at(l);
  return total;
}

ContentClass FapCacheSelection::class_of(int rank) const {
  if (rank < 1 || rank > static_cast<int>(y.size())) return ContentClass::kNonPopular;
  if (y[static_cast<std::size_t>(rank - 1)] == 0) return ContentClass::kPopular;
  if (z[static_cast<std::size_t>(rank - 1)] == 0) return ContentClass::kMediocre;
  return ContentClass::kNonPopular;
}

FapCacheSelection solve_fap_placement(std::span<const double> weights, double alpha, int cache_capacity,
                                      int segments) {
  check_weights(weights);
  if (cache_capacity < 1) throw std::invalid_argument("solve_fap_placement: cache capacity must be >= 1");
  if (segments < 1) throw std::invalid_argument("solve_fap_placement: segments must be >= 1");
  const int np = popular_count(alpha, cache_capacity);
  const int na = segments * (cache_capacity - np);
  const auto order = by_weight(weights);
  const auto n = static_cast<int>(order.size());

  FapCacheSelection out;
  out.y.assign(weights.size(), 1);
  out.z.assign(weights.size(), 1);
  out.mediocre_row.assign(weights.size(), -1);
  const int p_end = std::min(np, n);
  const int m_end = std::min(np + na, n);
  for (int k = 0; k < p_end; ++k) {
    const int l = order[static_cast<std::size_t>(k)];
    out.popular.push_back(l);
    out.y[static_cast<std::size_t>(l - 1)] = 0;
  }
  for (int k = p_end; k < m_end; ++k) {
    const int l = order[static_cast<std::size_t>(k)];
    out.mediocre_row[static_cast<std::size_t>(l - 1)] = static_cast<int>(out.mediocre.size());
    out.mediocre.push_back(l);
    out.z[static_cast<std::size_t>(l - 1)] = 0;
  }
  return out;
}

double fap_objective(std::span<const double> weights, const FapCacheSelection& selection, int segments,
                     bool segment_weighting) {
  const double c = segment_weighting ? 1.0 / segments : 1.0;
  double total = 0.0;
  for (std::size_t l = 0; l < weights.size(); ++l)
    total += weights[l] * selection.y.at(l) + c * weights[l] * selection.z.at(l);
  return total;
}

void SegmentMatrix::set(int row, int segment) {
  if (segment < 0 || segment >= cols_) throw std::out_of_range("SegmentMatrix::set: segment out of range");
  segment_.at(static_cast<std::size_t>(row)) = segment;
}

int row_dot(const SegmentMatrix& a, const SegmentMatrix& b, int row) {
  int dot = 0;
  for (int s = 0; s < a.segments(); ++s) dot += a.at(row, s) * b.at(row, s);
  return dot;
}

std::vector<SegmentMatrix> assign_segments(std::span<const int> cluster, int mediocre_count, int segments) {
  if (static_cast<int>(cluster.size()) != segments)
    throw std::invalid_argument("assign_segments: cluster has " + std::to_string(cluster.size()) +
                                " FAPs but contents have " + std::to_string(segments) + " segments");
  std::vector<SegmentMatrix> out(cluster.size(), SegmentMatrix(mediocre_count, segments));
  for (int i = 0; i < segments; ++i) {
    for (int l = 0; l < mediocre_count; ++l) out[static_cast<std::size_t>(i)].set(l, (i + l) % segments);
  }
  return out;
}

int reuse_offset(int w, int z) {
  if (w < 0 || z < 0 || (w == 0 && z == 0))
    throw std::invalid_argument("reuse_offset: w, z must be non-negative and not both zero");
  return w * w + w * z + z * z;
}

std::vector<SegmentMatrix> replicate_across_clusters(const Network& net, int source_cluster,
                                                     std::span<const SegmentMatrix> matrices, int w, int z) {
  const auto& source = net.cluster(source_cluster);
  if (matrices.size() != source.size())
    throw std::invalid_argument("replicate_across_clusters: one matrix per source-cluster member required");
  std::vector<SegmentMatrix> out(net.faps().size());

  const bool hex = net.layout() == Layout::kHex &&
                   std::all_of(net.faps().begin(), net.faps().end(), [](const FapSite& f) { return f.lattice.has_value(); });
  if (hex) {
    const int n = reuse_offset(w, z);
    if (n != static_cast<int>(source.size()))
      throw std::invalid_argument("replicate_across_clusters: reuse index " + std::to_string(n) +
                                  " differs from cluster size " + std::to_string(source.size()));
    std::vector<int> by_label(source.size(), -1);
    for (std::size_t k = 0; k < source.size(); ++k)
      by_label[static_cast<std::size_t>(reuse_label(*net.fap(source[k]).lattice, w, z))] = static_cast<int>(k);
    for (const auto& f : net.faps()) {
      const int k = by_label[static_cast<std::size_t>(reuse_label(*f.lattice, w, z))];
      if (k < 0) throw std::logic_error("replicate_across_clusters: source cluster lacks a reuse label");
      out[static_cast<std::size_t>(f.id)] = matrices[static_cast<std::size_t>(k)];
    }
    return out;
  }
  spdlog::warn("replicate_across_clusters: non-hex topology, copying matrices by intra-cluster index");
  for (const auto& f : net.faps()) out[static_cast<std::size_t>(f.id)] = matrices[static_cast<std::size_t>(f.cluster_index)];
  return out;
}

int Placement::segment_at(int fap, int rank) const {
  const int row = selection.row_of(rank);
  if (row < 0) return -1;
  return per_fap.at(static_cast<std::size_t>(fap)).segment(row);
}

Placement build_placement(const Network& net, FapCacheSelection selection, int segments, int w, int z) {
  Placement out;
  out.segments = segments;
  if (!net.clusters().empty()) {
    const auto& source = net.cluster(0);
    const auto matrices = assign_segments(source, static_cast<int>(selection.mediocre.size()), segments);
    out.per_fap = replicate_across_clusters(net, 0, matrices, w, z);
  }
  out.selection = std::move(selection);
  return out;
}

double kappa(double alpha, int cache_capacity, int segments) {
  if (cache_capacity < 1) throw std::invalid_argument("kappa: cache capacity must be >= 1");
  const int np = popular_count(alpha, cache_capacity);
  return static_cast<double>(np + segments * (cache_capacity - np)) / cache_capacity;
}

double cache_diversity(double alpha, int cache_capacity, int segments) {
  if (cache_capacity < 1) throw std::invalid_argument("cache_diversity: cache capacity must be >= 1");
  const int na = coded_content_count(alpha, cache_capacity, segments);
  return static_cast<double>(na) / (static_cast<double>(segments) * cache_capacity);
}

double cache_redundancy(double alpha, int cache_capacity, int segments) {
  if (cache_capacity < 1) throw std::invalid_argument("cache_redundancy: cache capacity must be >= 1");
  const int np = popular_count(alpha, cache_capacity);
  return static_cast<double>(segments - 1) * np / (static_cast<double>(segments) * cache_capacity);
}

double beta_max(double alpha, int segments) {
  if (segments < 1) throw std::invalid_argument("beta_max: segments must be >= 1");
  const double denom = alpha * (1.0 - segments) + segments;
  if (!(denom > 0.0)) throw std::domain_error("beta_max: non-positive denominator");
  return 1.0 / denom;
}

ClusterStorage measure_cluster(const Placement& placement, const Network& net, int cluster) {
  std::map<int, int> whole;
  std::map<std::pair<int, int>, int> pieces;
  std::map<int, std::vector<bool>> coverage;
  for (int fap : net.cluster(cluster)) {
    for (int l : placement.selection.popular) ++whole[l];
    const auto& m = placement.per_fap.at(static_cast<std::size_t>(fap));
    for (int row = 0; row < m.rows(); ++row) {
      const int l = placement.selection.mediocre.at(static_cast<std::size_t>(row));
      ++pieces[{l, m.segment(row)}];
      auto& cov = coverage[l];
      cov.resize(static_cast<std::size_t>(placement.segments), false);
      cov[static_cast<std::size_t>(m.segment(row))] = true;
    }
  }
  ClusterStorage out;
  // Count in segment units so the shares are exact ratios of integers.
  const long long per = placement.segments;
  long long total = 0;
  long long dup = 0;
  long long coded = 0;
  for (const auto& [l, copies] : whole) {
    total += copies * per;
    dup += (copies - 1) * per;
    ++out.distinct_contents;
  }
  for (const auto& [key, copies] : pieces) {
    total += copies;
    dup += copies - 1;
    if (copies == 1) ++coded;
  }
  out.total_units = static_cast<double>(total) / static_cast<double>(per);
  out.duplicate_units = static_cast<double>(dup) / static_cast<double>(per);
  out.coded_units = static_cast<double>(coded) / static_cast<double>(per);
  out.total_segments = total;
  out.duplicate_segments = dup;
  out.coded_segments = coded;
  for (const auto& [l, cov] : coverage) {
    if (!whole.contains(l) && std::all_of(cov.begin(), cov.end(), [](bool b) { return b; })) ++out.distinct_contents;
  }
  return out;
}

double cache_redundancy(const Placement& placement, const Network& net, int cluster) {
  return measure_cluster(placement, net, cluster).redundancy();
}

void write_placement_csv(std::ostream& out, const Placement& placement, const Network& net) {
  out << "fap_id,content_id,segment_id\n";
  for (const auto& f : net.faps()) {
    for (int l : placement.selection.popular) out << f.id << ',' << l << ",FULL\n";
    const auto& m = placement.per_fap.at(static_cast<std::size_t>(f.id));
    for (int row = 0; row < m.rows(); ++row)
      out << f.id << ',' << placement.selection.mediocre.at(static_cast<std::size_t>(row)) << ',' << m.segment(row) + 1
          << '\n';
  }
}

}  // namespace ccuf
