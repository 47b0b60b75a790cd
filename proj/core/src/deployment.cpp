#include "ccuf/deployment.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace ccuf {

namespace {

int nearest(Vec2 p, const std::vector<Vec2>& centroids) {
  int best = 0;
  double best_d = distance2(p, centroids[0]);
  for (std::size_t k = 1; k < centroids.size(); ++k) {
    const double d = distance2(p, centroids[k]);
    if (d < best_d) {
      best_d = d;
      best = static_cast<int>(k);
    }
  }
  return best;
}

void score(std::span<const Vec2> users, IntraClustering& c) {
  c.sum_distance = 0.0;
  c.sum_squared_distance = 0.0;
  for (std::size_t j = 0; j < users.size(); ++j) {
    const double d2 = distance2(users[j], c.centroids[static_cast<std::size_t>(c.assignment[j])]);
    c.sum_squared_distance += d2;
    c.sum_distance += std::sqrt(d2);
  }
}

// Returns true when any assignment changed.
bool assign(std::span<const Vec2> users, IntraClustering& c) {
  bool changed = false;
  std::vector<int> counts(c.centroids.size(), 0);
  for (std::size_t j = 0; j < users.size(); ++j) {
    const int k = nearest(users[j], c.centroids);
    changed |= c.assignment[j] != k;
    c.assignment[j] = k;
    ++counts[static_cast<std::size_t>(k)];
  }
  for (std::size_t k = 0; k < counts.size(); ++k) {
    if (counts[k] > 0) continue;
    std::size_t far = 0;
    double far_d = -1.0;
    for (std::size_t j = 0; j < users.size(); ++j) {
      const auto a = static_cast<std::size_t>(c.assignment[j]);
      if (counts[a] < 2) continue;
      const double d = distance2(users[j], c.centroids[a]);
      if (d > far_d) {
        far_d = d;
        far = j;
      }
    }
    if (far_d < 0.0) continue;
    --counts[static_cast<std::size_t>(c.assignment[far])];
    c.assignment[far] = static_cast<int>(k);
    c.centroids[k] = users[far];
    counts[k] = 1;
    changed = true;
  }
  return changed;
}

double update(std::span<const Vec2> users, IntraClustering& c) {
  std::vector<Vec2> sum(c.centroids.size());
  std::vector<int> counts(c.centroids.size(), 0);
  for (std::size_t j = 0; j < users.size(); ++j) {
    const auto k = static_cast<std::size_t>(c.assignment[j]);
    sum[k] = sum[k] + users[j];
    ++counts[k];
  }
  double shift = 0.0;
  for (std::size_t k = 0; k < c.centroids.size(); ++k) {
    if (counts[k] == 0) continue;
    const Vec2 next = sum[k] * (1.0 / counts[k]);
    shift = std::max(shift, distance(next, c.centroids[k]));
    c.centroids[k] = next;
  }
  return shift;
}

}  // namespace

IntraClustering kmeans_deploy(std::span<const Vec2> users, int clusters, double region_radius_m, Rng& rng,
                              int max_iter, double tol) {
  if (clusters < 1) throw std::invalid_argument("kmeans_deploy: need at least one cluster");
  if (static_cast<int>(users.size()) < clusters)
    throw std::invalid_argument("kmeans_deploy: " + std::to_string(users.size()) + " users for " +
                                std::to_string(clusters) + " clusters");
  IntraClustering c;
  c.centroids.resize(static_cast<std::size_t>(clusters));
  for (auto& p : c.centroids) {
    const double rho = region_radius_m * std::sqrt(uniform01(rng));
    const double theta = 2.0 * M_PI * uniform01(rng);
    p = {rho * std::cos(theta), rho * std::sin(theta)};
  }
  c.assignment.assign(users.size(), -1);
  assign(users, c);
  score(users, c);
  c.objective_history.push_back(c.sum_squared_distance);
  for (int it = 0; it < max_iter; ++it) {
    const double shift = update(users, c);
    ++c.iterations;
    const bool changed = assign(users, c);
    score(users, c);
    c.objective_history.push_back(c.sum_squared_distance);
    if (!changed || shift <= tol) {
      if (changed) update(users, c);
      c.converged = true;
      break;
    }
  }
  score(users, c);
  return c;
}

void write_clustering_csv(std::ostream& out, const IntraClustering& c, std::span<const int> user_ids, int epoch) {
  out.precision(17);
  for (std::size_t j = 0; j < c.assignment.size(); ++j) {
    const auto& p = c.centroids[static_cast<std::size_t>(c.assignment[j])];
    out << epoch << ',' << (j < user_ids.size() ? user_ids[j] : static_cast<int>(j)) << ',' << c.assignment[j] << ','
        << p.x << ',' << p.y << '\n';
  }
}

}  // namespace ccuf
