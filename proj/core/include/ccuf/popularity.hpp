#pragma once

#include <memory>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "ccuf/rng.hpp"

namespace ccuf {

/// Probability of rank `rank` (1-based) under a Zipf law with skew `gamma` over `catalog_size` items.
double zipf_popularity(int rank, double gamma, int catalog_size);

class ZipfProfile {
 public:
  ZipfProfile(int catalog_size, double gamma);

  int size() const { return static_cast<int>(p_.size()); }
  double gamma() const { return gamma_; }
  /// 1-based rank.
  double p(int rank) const { return p_.at(static_cast<std::size_t>(rank - 1)); }
  std::span<const double> probabilities() const { return p_; }
  /// Sum of p over ranks [first, last], clamped to the catalog; empty range gives 0.
  double mass(int first, int last) const;

 private:
  double gamma_;
  std::vector<double> p_;
  std::vector<double> prefix_;
};

enum class ContentClass { kPopular, kMediocre, kNonPopular };

std::string to_string(ContentClass c);

/// Number of whole contents in the popular budget, floor(alpha * C_f).
int popular_count(double alpha, int cache_capacity);
/// Mediocre contents held by an inter-cluster as one segment per FAP: N_s (C_f - N_p).
int coded_content_count(double alpha, int cache_capacity, int segments);

/// Class of rank `rank` from the alpha split ranges.
ContentClass classify(int rank, double alpha, int cache_capacity, int segments);

struct ContentCatalog {
  ContentCatalog(ZipfProfile profile, int segments, double alpha, int cache_capacity, double file_size_mb);

  ZipfProfile profile;
  int segments;
  double alpha;
  int cache_capacity;
  double file_size_mb;
  std::vector<ContentClass> classes;

  ContentClass class_of(int rank) const { return classes.at(static_cast<std::size_t>(rank - 1)); }
};

/// Per-user request distribution with cached CDFs. Identical users share storage.
class UserDemand {
 public:
  UserDemand() = default;
  /// Every user requests according to `probabilities`.
  UserDemand(std::span<const double> probabilities, int users);
  explicit UserDemand(std::vector<std::vector<double>> per_user);

  int users() const { return static_cast<int>(rows_.size()); }
  int catalog_size() const { return rows_.empty() ? 0 : static_cast<int>(rows_.front()->p.size()); }
  std::span<const double> probabilities(int user) const { return row(user).p; }

  /// Rank drawn from the user's distribution; consumes exactly one uniform variate.
  int sample(int user, Rng& rng) const;

 private:
  struct Row {
    std::vector<double> p;
    std::vector<double> cdf;
  };
  static std::shared_ptr<const Row> make_row(std::vector<double> p);
  const Row& row(int user) const { return *rows_.at(static_cast<std::size_t>(user)); }
  std::vector<std::shared_ptr<const Row>> rows_;
};

int sample_request(int user, const UserDemand& demand, Rng& rng);

/// Zipf demand, optionally perturbed per user by a Dirichlet draw with concentration
/// `concentration` times the Zipf probabilities. `concentration <= 0` gives identical users.
UserDemand make_demand(const ZipfProfile& profile, int users, double concentration, Rng& rng);

/// weight_l = sum_j p_l^(j) * delay_j.
std::vector<double> aggregate_demand(const UserDemand& demand, std::span<const double> delays);

void write_catalog_csv(std::ostream& out, const ContentCatalog& catalog);
void write_demand_csv(std::ostream& out, const UserDemand& demand);

}  // namespace ccuf
