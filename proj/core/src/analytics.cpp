#include "ccuf/analytics.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "ccuf/placement.hpp"

namespace ccuf {

namespace {

constexpr double kZ95 = 1.959963984540054;

struct Split {
  double popular;
  double coded;
};

Split class_masses(const ZipfProfile& profile, double alpha, int cache_capacity, int segments) {
  if (cache_capacity < 1) throw std::invalid_argument("cache capacity must be >= 1");
  if (segments < 1) throw std::invalid_argument("segments must be >= 1");
  const int np = popular_count(alpha, cache_capacity);
  const int na = coded_content_count(alpha, cache_capacity, segments);
  return {profile.mass(1, np), profile.mass(np + 1, np + na)};
}

}  // namespace

double success_prob_uncoded(const ZipfProfile& profile, int cache_capacity) {
  if (cache_capacity < 0 || cache_capacity > profile.size())
    throw std::invalid_argument("success_prob_uncoded: cache capacity must be in [0, N_c]");
  return profile.mass(1, cache_capacity);
}

double success_prob_coded_simple(const ZipfProfile& profile, double alpha, int cache_capacity, int segments) {
  const Split s = class_masses(profile, alpha, cache_capacity, segments);
  return s.popular + s.coded;
}

double p_new_segment(int n0, int segments) {
  if (n0 < 1) throw std::invalid_argument("p_new_segment: contact index must be >= 1");
  if (segments < 1) throw std::invalid_argument("p_new_segment: segments must be >= 1");
  if (n0 <= 2) return 1.0;
  if (segments <= 2) return 0.0;
  return std::pow(static_cast<double>(segments - 2) / static_cast<double>(segments - 1), n0 - 2);
}

double success_prob_coded_rw(const ZipfProfile& profile, double alpha, int cache_capacity, int segments, RwMode mode) {
  const Split s = class_masses(profile, alpha, cache_capacity, segments);
  if (mode == RwMode::kClamped || segments == 1) {
    double factor = 0.0;
    for (int n = 1; n <= segments; ++n) factor += p_new_segment(n, segments);
    return s.popular + s.coded * factor / segments;
  }
  if (segments == 2) return s.coded > 0.0 ? std::numeric_limits<double>::infinity() : s.popular;
  const double r = static_cast<double>(segments - 2) / static_cast<double>(segments - 1);
  double factor = 0.0;
  for (int n = 1; n <= segments; ++n) factor += std::pow(r, n - 2);
  return s.popular + s.coded * factor;
}

McEstimate bernoulli_estimate(std::size_t successes, std::size_t trials) {
  if (trials == 0) throw std::invalid_argument("Monte Carlo estimate needs at least one trial");
  const double n = static_cast<double>(trials);
  const double p = static_cast<double>(successes) / n;
  return {p, kZ95 * std::sqrt(p * (1.0 - p) / n), trials};
}

McEstimate monte_carlo_success(const SuccessProbInputs& in, std::size_t trials, Rng& rng) {
  if (trials == 0) throw std::invalid_argument("monte_carlo_success: trials must be >= 1");
  if (in.profile == nullptr) throw std::invalid_argument("monte_carlo_success: profile required");
  if (in.segments < 1 || in.segments > 64) throw std::invalid_argument("monte_carlo_success: segments must be in [1, 64]");
  const int np = popular_count(in.alpha, in.cache_capacity);
  const int na = coded_content_count(in.alpha, in.cache_capacity, in.segments);
  std::vector<int> members(static_cast<std::size_t>(in.segments));
  std::iota(members.begin(), members.end(), 0);
  const auto matrices = assign_segments(members, in.segments, in.segments);
  const UserDemand demand(in.profile->probabilities(), 1);

  std::size_t ok = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    const int rank = demand.sample(0, rng);
    if (rank <= np) {
      ++ok;
      continue;
    }
    if (rank > np + na) continue;
    const int row = (rank - np - 1) % in.segments;
    int at = std::uniform_int_distribution<int>(0, in.segments - 1)(rng);
    std::uint64_t visited = std::uint64_t{1} << at;
    std::uint64_t held = std::uint64_t{1} << matrices[static_cast<std::size_t>(at)].segment(row);
    for (int contact = 2; contact <= in.segments; ++contact) {
      at = next_cluster_member(in.model, at, visited, in.segments, rng);
      visited |= std::uint64_t{1} << at;
      held |= std::uint64_t{1} << matrices[static_cast<std::size_t>(at)].segment(row);
    }
    if (std::popcount(held) == in.segments) ++ok;
  }
  return bernoulli_estimate(ok, trials);
}

McEstimate monte_carlo_new_segment(int segments, int n0, MobilityModel model, std::size_t trials, Rng& rng) {
  if (trials == 0) throw std::invalid_argument("monte_carlo_new_segment: trials must be >= 1");
  if (n0 < 1) throw std::invalid_argument("monte_carlo_new_segment: contact index must be >= 1");
  if (segments < 1 || segments > 64) throw std::invalid_argument("monte_carlo_new_segment: segments must be in [1, 64]");
  std::size_t fresh = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    int at = std::uniform_int_distribution<int>(0, segments - 1)(rng);
    std::uint64_t visited = std::uint64_t{1} << at;
    bool last_new = true;
    for (int contact = 2; contact <= n0; ++contact) {
      at = next_cluster_member(model, at, visited, segments, rng);
      last_new = !((visited >> at) & 1U);
      visited |= std::uint64_t{1} << at;
    }
    if (last_new) ++fresh;
  }
  return bernoulli_estimate(fresh, trials);
}

}  // namespace ccuf
