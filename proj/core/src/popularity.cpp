#include "ccuf/popularity.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ccuf {

namespace {

// Neumaier-compensated sum of rank^-gamma.
std::vector<double> zipf_weights(int n, double gamma) {
  std::vector<double> w(static_cast<std::size_t>(n));
  for (int l = 1; l <= n; ++l) w[static_cast<std::size_t>(l - 1)] = std::pow(static_cast<double>(l), -gamma);
  return w;
}

double compensated_sum(std::span<const double> xs) {
  double sum = 0.0;
  double c = 0.0;
  for (double x : xs) {
    const double t = sum + x;
    c += std::abs(sum) >= std::abs(x) ? (sum - t) + x : (x - t) + sum;
    sum = t;
  }
  return sum + c;
}

}  // namespace

double zipf_popularity(int rank, double gamma, int catalog_size) {
  if (catalog_size < 1) throw std::out_of_range("zipf_popularity: catalog size must be >= 1");
  if (rank < 1 || rank > catalog_size) throw std::out_of_range("zipf_popularity: rank out of range");
  if (!(gamma >= 0.0)) throw std::invalid_argument("zipf_popularity: gamma must be >= 0");
  const auto w = zipf_weights(catalog_size, gamma);
  return w[static_cast<std::size_t>(rank - 1)] / compensated_sum(w);
}

ZipfProfile::ZipfProfile(int catalog_size, double gamma) : gamma_(gamma) {
  if (catalog_size < 1) throw std::invalid_argument("ZipfProfile: catalog size must be >= 1");
  if (!(gamma >= 0.0) || !std::isfinite(gamma)) throw std::invalid_argument("ZipfProfile: gamma must be >= 0");
  p_ = zipf_weights(catalog_size, gamma);
  const double total = compensated_sum(p_);
  for (double& x : p_) x /= total;
  prefix_.resize(p_.size() + 1, 0.0);
  double sum = 0.0;
  double c = 0.0;
  for (std::size_t i = 0; i < p_.size(); ++i) {
    const double t = sum + p_[i];
    c += std::abs(sum) >= std::abs(p_[i]) ? (sum - t) + p_[i] : (p_[i] - t) + sum;
    sum = t;
    prefix_[i + 1] = sum + c;
  }
}

double ZipfProfile::mass(int first, int last) const {
  first = std::max(first, 1);
  last = std::min(last, size());
  if (last < first) return 0.0;
  if (last - first < 64) {
    return compensated_sum(std::span<const double>(p_).subspan(static_cast<std::size_t>(first - 1),
                                                               static_cast<std::size_t>(last - first + 1)));
  }
  return prefix_[static_cast<std::size_t>(last)] - prefix_[static_cast<std::size_t>(first - 1)];
}

std::string to_string(ContentClass c) {
  switch (c) {
    case ContentClass::kPopular: return "popular";
    case ContentClass::kMediocre: return "mediocre";
    case ContentClass::kNonPopular: return "nonpopular";
  }
  return "unknown";
}

int popular_count(double alpha, int cache_capacity) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw std::invalid_argument("alpha must be in [0, 1]");
  // Guard against alpha*C_f landing just below an integer (0.29 * 100).
  return static_cast<int>(std::floor(alpha * cache_capacity + 1e-9));
}

int coded_content_count(double alpha, int cache_capacity, int segments) {
  return segments * (cache_capacity - popular_count(alpha, cache_capacity));
}

ContentClass classify(int rank, double alpha, int cache_capacity, int segments) {
  const int np = popular_count(alpha, cache_capacity);
  if (rank >= 1 && rank <= np) return ContentClass::kPopular;
  if (rank >= np + 1 && rank <= segments * (cache_capacity - np)) return ContentClass::kMediocre;
  return ContentClass::kNonPopular;
}

ContentCatalog::ContentCatalog(ZipfProfile profile_in, int segments_in, double alpha_in, int cache_capacity_in,
                               double file_size_mb_in)
    : profile(std::move(profile_in)),
      segments(segments_in),
      alpha(alpha_in),
      cache_capacity(cache_capacity_in),
      file_size_mb(file_size_mb_in) {
  classes.resize(static_cast<std::size_t>(profile.size()));
  for (int l = 1; l <= profile.size(); ++l)
    classes[static_cast<std::size_t>(l - 1)] = classify(l, alpha, cache_capacity, segments);
}

std::shared_ptr<const UserDemand::Row> UserDemand::make_row(std::vector<double> p) {
  if (p.empty()) throw std::invalid_argument("UserDemand: empty distribution");
  auto row = std::make_shared<Row>();
  double total = 0.0;
  for (double x : p) {
    if (!(x >= 0.0)) throw std::invalid_argument("UserDemand: probabilities must be non-negative");
    total += x;
  }
  if (!(std::abs(total - 1.0) < 1e-9)) throw std::invalid_argument("UserDemand: probabilities must sum to 1");
  row->cdf.resize(p.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    acc += p[i];
    row->cdf[i] = acc;
  }
  row->cdf.back() = std::max(row->cdf.back(), 1.0);
  row->p = std::move(p);
  return row;
}

UserDemand::UserDemand(std::span<const double> probabilities, int users) {
  auto shared = make_row(std::vector<double>(probabilities.begin(), probabilities.end()));
  rows_.assign(static_cast<std::size_t>(users), shared);
}

UserDemand::UserDemand(std::vector<std::vector<double>> per_user) {
  rows_.reserve(per_user.size());
  for (auto& p : per_user) rows_.push_back(make_row(std::move(p)));
  for (const auto& r : rows_) {
    if (r->p.size() != rows_.front()->p.size()) throw std::invalid_argument("UserDemand: rows differ in length");
  }
}

int UserDemand::sample(int user, Rng& rng) const {
  const Row& r = row(user);
  const double u = uniform01(rng);
  const auto it = std::upper_bound(r.cdf.begin(), r.cdf.end(), u);
  const auto idx = std::min<std::ptrdiff_t>(it - r.cdf.begin(), static_cast<std::ptrdiff_t>(r.cdf.size()) - 1);
  return static_cast<int>(idx) + 1;
}

int sample_request(int user, const UserDemand& demand, Rng& rng) { return demand.sample(user, rng); }

UserDemand make_demand(const ZipfProfile& profile, int users, double concentration, Rng& rng) {
  if (concentration <= 0.0) return UserDemand(profile.probabilities(), users);
  std::vector<std::vector<double>> rows(static_cast<std::size_t>(users));
  for (auto& row : rows) {
    row.resize(static_cast<std::size_t>(profile.size()));
    double total = 0.0;
    for (int l = 1; l <= profile.size(); ++l) {
      const double g = std::gamma_distribution<double>(concentration * profile.p(l) * profile.size(), 1.0)(rng);
      row[static_cast<std::size_t>(l - 1)] = g;
      total += g;
    }
    if (!(total > 0.0)) {
      row.assign(profile.probabilities().begin(), profile.probabilities().end());
      continue;
    }
    for (double& x : row) x /= total;
  }
  return UserDemand(std::move(rows));
}

std::vector<double> aggregate_demand(const UserDemand& demand, std::span<const double> delays) {
  if (static_cast<int>(delays.size()) != demand.users())
    throw std::invalid_argument("aggregate_demand: " + std::to_string(delays.size()) + " delays for " +
                                std::to_string(demand.users()) + " users");
  std::vector<double> w(static_cast<std::size_t>(demand.catalog_size()), 0.0);
  for (int j = 0; j < demand.users(); ++j) {
    const double d = delays[static_cast<std::size_t>(j)];
    if (!(d >= 0.0)) throw std::invalid_argument("aggregate_demand: delays must be >= 0");
    const auto p = demand.probabilities(j);
    for (std::size_t l = 0; l < w.size(); ++l) w[l] += p[l] * d;
  }
  return w;
}

void write_catalog_csv(std::ostream& out, const ContentCatalog& catalog) {
  out << "rank,probability,class\n";
  out.precision(17);
  for (int l = 1; l <= catalog.profile.size(); ++l)
    out << l << ',' << catalog.profile.p(l) << ',' << to_string(catalog.class_of(l)) << '\n';
}

void write_demand_csv(std::ostream& out, const UserDemand& demand) {
  out << "user,rank,probability\n";
  out.precision(17);
  for (int j = 0; j < demand.users(); ++j) {
    const auto p = demand.probabilities(j);
    for (std::size_t l = 0; l < p.size(); ++l) out << j << ',' << l + 1 << ',' << p[l] << '\n';
  }
}

}  // namespace ccuf
