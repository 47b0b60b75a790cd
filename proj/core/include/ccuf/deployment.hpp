#pragma once

#include <ostream>
#include <span>
#include <vector>

#include "ccuf/geometry.hpp"
#include "ccuf/rng.hpp"

namespace ccuf {

struct IntraClustering {
  /// Cluster of each input point.
  std::vector<int> assignment;
  std::vector<Vec2> centroids;
  /// Sum of Euclidean distances to the assigned centroid.
  double sum_distance = 0.0;
  /// Sum of squared Euclidean distances to the assigned centroid.
  double sum_squared_distance = 0.0;
  /// Squared objective after the initial assignment and after every update.
  std::vector<double> objective_history;
  int iterations = 0;
  bool converged = false;
};

/// Lloyd's algorithm with centroids initialised uniformly in the disc of radius `region_radius_m`.
/// A cluster left empty by an assignment step takes the point currently farthest from its centroid.
IntraClustering kmeans_deploy(std::span<const Vec2> users, int clusters, double region_radius_m, Rng& rng,
                              int max_iter = 100, double tol = 1e-9);

/// Rows: user, cluster, centroid_x, centroid_y.
void write_clustering_csv(std::ostream& out, const IntraClustering& c, std::span<const int> user_ids, int epoch);

}  // namespace ccuf
