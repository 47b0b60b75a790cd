#pragma once

#include <cstddef>

#include "ccuf/mobility.hpp"
#include "ccuf/popularity.hpp"
#include "ccuf/rng.hpp"

namespace ccuf {

/// Probability mass of the C_f most popular contents.
double success_prob_uncoded(const ZipfProfile& profile, int cache_capacity);

/// Popular mass plus the mass of the N_s (C_f - N_p) coded contents that follow it.
double success_prob_coded_simple(const ZipfProfile& profile, double alpha, int cache_capacity, int segments);

/// Probability that contact `n0` of a random walk over the cluster yields an unseen segment.
double p_new_segment(int n0, int segments);

enum class RwMode { kClamped, kLiteral };

/// Random-walk success probability. Clamped mode weights the coded mass by the mean per-contact
/// new-segment probability; literal mode sums the full coded mass times ((N_s-2)/(N_s-1))^(n-2)
/// for n = 1..N_s and may exceed 1 (infinite for N_s = 2).
double success_prob_coded_rw(const ZipfProfile& profile, double alpha, int cache_capacity, int segments,
                             RwMode mode = RwMode::kClamped);

struct SuccessProbInputs {
  int segments = 7;
  int cache_capacity = 10;
  double alpha = 0.0;
  const ZipfProfile* profile = nullptr;
  MobilityModel model = MobilityModel::kSimple;
};

struct McEstimate {
  double mean = 0.0;
  /// Half-width of the normal-approximation 95% interval.
  double half_width = 0.0;
  std::size_t trials = 0;

  double lower() const { return mean - half_width; }
  double upper() const { return mean + half_width; }
  bool contains(double x) const { return x >= lower() && x <= upper(); }
};

McEstimate bernoulli_estimate(std::size_t successes, std::size_t trials);

/// A user requests a content from the profile and collects one segment per contact over N_s
/// contacts of the configured walk; success means the whole content was obtained.
McEstimate monte_carlo_success(const SuccessProbInputs& inputs, std::size_t trials, Rng& rng);

/// Frequency with which contact `n0` of the walk lands on a cluster member not met before.
McEstimate monte_carlo_new_segment(int segments, int n0, MobilityModel model, std::size_t trials, Rng& rng);

}  // namespace ccuf
