#include <gtest/gtest.h>

#include <algorithm>
#include <set>
#include <sstream>

#include "ccuf/placement.hpp"
#include "oracles.hpp"

using namespace ccuf;

namespace {

std::vector<double> random_weights(int n, Rng& rng) {
  std::vector<double> w(static_cast<std::size_t>(n));
  for (auto& x : w) x = uniform01(rng);
  return w;
}

std::vector<double> decreasing(int n) {
  std::vector<double> w(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = n - i;
  return w;
}

Network hex49() {
  TopologyParams p;
  Rng rng = make_stream(0, 0, Stream::kTopology);
  return build_topology(p, rng);
}

}  // namespace

TEST(UavPlacement, SortedAndTies) {
  const auto w = decreasing(10);
  EXPECT_EQ(solve_uav_placement(w, 3).selected, (std::vector<int>{1, 2, 3}));
  const std::vector<double> flat(6, 1.0);
  EXPECT_EQ(solve_uav_placement(flat, 2).selected, (std::vector<int>{1, 2}));
  const auto all = solve_uav_placement(w, 50);
  EXPECT_EQ(all.selected.size(), 10u);
}

TEST(UavPlacement, IndicatorConsistent) {
  Rng rng(1);
  const auto w = random_weights(30, rng);
  const auto s = solve_uav_placement(w, 7);
  int zeros = 0;
  for (int l = 1; l <= 30; ++l) {
    zeros += s.indicator[static_cast<std::size_t>(l - 1)] == 0;
    EXPECT_EQ(s.contains(l), std::find(s.selected.begin(), s.selected.end(), l) != s.selected.end());
  }
  EXPECT_EQ(zeros, 7);
}

TEST(UavPlacement, MatchesExhaustiveSearch) {
  Rng rng(42);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = std::uniform_int_distribution<int>(1, 12)(rng);
    const int cap = std::uniform_int_distribution<int>(0, 4)(rng);
    const auto w = random_weights(n, rng);
    EXPECT_NEAR(uav_objective(w, solve_uav_placement(w, cap)), oracle::exhaustive_uav(w, cap), 1e-12);
  }
}

TEST(FapPlacement, DegenerateBudgets) {
  const auto w = decreasing(100);
  const auto uuf = solve_fap_placement(w, 1.0, 5, 7);
  EXPECT_EQ(uuf.popular, solve_uav_placement(w, 5).selected);
  EXPECT_TRUE(uuf.mediocre.empty());
  const auto ccuf = solve_fap_placement(w, 0.0, 5, 7);
  EXPECT_TRUE(ccuf.popular.empty());
  EXPECT_EQ(ccuf.mediocre.size(), 35u);
  EXPECT_EQ(ccuf.mediocre.front(), 1);
  EXPECT_EQ(ccuf.mediocre.back(), 35);
}

TEST(FapPlacement, SetsDisjointAndWithinBudgets) {
  Rng rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const auto w = random_weights(200, rng);
    const double alpha = uniform01(rng);
    const auto s = solve_fap_placement(w, alpha, 10, 7);
    EXPECT_EQ(static_cast<int>(s.popular.size()), popular_count(alpha, 10));
    EXPECT_EQ(static_cast<int>(s.mediocre.size()), coded_content_count(alpha, 10, 7));
    for (int l = 1; l <= 200; ++l) {
      const auto i = static_cast<std::size_t>(l - 1);
      EXPECT_FALSE(s.y[i] == 0 && s.z[i] == 0);
    }
    for (std::size_t r = 0; r < s.mediocre.size(); ++r) EXPECT_EQ(s.row_of(s.mediocre[r]), static_cast<int>(r));
  }
}

TEST(FapPlacement, MatchesExhaustiveSearch) {
  Rng rng(7);
  int checked = 0;
  while (checked < 120) {
    const int n = std::uniform_int_distribution<int>(2, 12)(rng);
    const int cf = std::uniform_int_distribution<int>(1, 4)(rng);
    const int ns = std::uniform_int_distribution<int>(1, 4)(rng);
    const double alpha = std::uniform_int_distribution<int>(0, 4)(rng) / 4.0;
    const int np = popular_count(alpha, cf);
    const int na = coded_content_count(alpha, cf, ns);
    if (np > 4 || na > 4) continue;
    const auto w = random_weights(n, rng);
    for (bool sw : {false, true}) {
      const double c = sw ? 1.0 / ns : 1.0;
      const auto s = solve_fap_placement(w, alpha, cf, ns);
      EXPECT_NEAR(fap_objective(w, s, ns, sw), oracle::exhaustive_fap(w, np, na, c), 1e-12);
    }
    ++checked;
  }
}

TEST(Segments, SmallestCase) {
  const std::vector<int> cluster{10, 11};
  const auto m = assign_segments(cluster, 1, 2);
  EXPECT_EQ(m[0].segment(0), 0);
  EXPECT_EQ(m[1].segment(0), 1);
}

TEST(Segments, LatinSquareIsOrthogonal) {
  for (int ns : {1, 2, 3, 5, 7}) {
    std::vector<int> cluster(static_cast<std::size_t>(ns));
    const auto m = assign_segments(cluster, 40, ns);
    for (int l = 0; l < 40; ++l) {
      std::set<int> seen;
      for (int i = 0; i < ns; ++i) {
        seen.insert(m[static_cast<std::size_t>(i)].segment(l));
        for (int j = 0; j < ns; ++j) {
          if (i != j) EXPECT_EQ(row_dot(m[static_cast<std::size_t>(i)], m[static_cast<std::size_t>(j)], l), 0);
        }
        int ones = 0;
        for (int s = 0; s < ns; ++s) ones += m[static_cast<std::size_t>(i)].at(l, s);
        EXPECT_EQ(ones, 1);
      }
      EXPECT_EQ(static_cast<int>(seen.size()), ns);
    }
  }
}

TEST(Segments, WrongClusterSizeThrows) {
  const std::vector<int> cluster{1, 2, 3};
  EXPECT_THROW(assign_segments(cluster, 4, 7), std::invalid_argument);
}

TEST(Reuse, Offsets) {
  EXPECT_EQ(reuse_offset(2, 1), 7);
  EXPECT_EQ(reuse_offset(1, 0), 1);
  EXPECT_EQ(reuse_offset(1, 1), 3);
  EXPECT_THROW(reuse_offset(0, 0), std::invalid_argument);
  EXPECT_THROW(reuse_offset(-1, 2), std::invalid_argument);
}

TEST(Reuse, ReplicatedMatricesFollowCoChannelLabels) {
  const Network net = hex49();
  const auto sel = solve_fap_placement(decreasing(500), 0.3, 10, 7);
  const Placement pl = build_placement(net, sel, 7, 2, 1);
  for (const auto& a : net.faps())
    for (const auto& b : net.faps()) {
      const bool same = pl.per_fap[static_cast<std::size_t>(a.id)] == pl.per_fap[static_cast<std::size_t>(b.id)];
      EXPECT_EQ(same, reuse_label(*a.lattice, 2, 1) == reuse_label(*b.lattice, 2, 1));
    }
  for (std::size_t c = 0; c < net.clusters().size(); ++c) {
    const auto& members = net.clusters()[c];
    for (int l = 0; l < static_cast<int>(sel.mediocre.size()); ++l)
      for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = i + 1; j < members.size(); ++j)
          EXPECT_EQ(row_dot(pl.per_fap[static_cast<std::size_t>(members[i])],
                            pl.per_fap[static_cast<std::size_t>(members[j])], l),
                    0);
  }
}

TEST(Reuse, SingleClusterIsIdentity) {
  TopologyParams p;
  p.fap_count = 7;
  Rng rng(1);
  const Network net = build_topology(p, rng);
  const auto m = assign_segments(net.cluster(0), 12, 7);
  const auto out = replicate_across_clusters(net, 0, m, 2, 1);
  for (int i = 0; i < 7; ++i)
    EXPECT_EQ(out[static_cast<std::size_t>(net.cluster(0)[static_cast<std::size_t>(i)])], m[static_cast<std::size_t>(i)]);
}

TEST(Reuse, PppFallsBackToIndexCopies) {
  TopologyParams p;
  p.layout = Layout::kPpp;
  p.fap_count = 40;
  p.cluster_size = 4;
  Rng rng(5);
  const Network net = build_topology(p, rng);
  const auto m = assign_segments(net.cluster(0), 6, 4);
  const auto out = replicate_across_clusters(net, 0, m, 2, 1);
  for (const auto& f : net.faps()) EXPECT_EQ(out[static_cast<std::size_t>(f.id)], m[static_cast<std::size_t>(f.cluster_index)]);
}

TEST(ClosedForms, Kappa) {
  EXPECT_DOUBLE_EQ(kappa(1.0, 10, 7), 1.0);
  EXPECT_DOUBLE_EQ(kappa(0.0, 10, 7), 7.0);
  EXPECT_DOUBLE_EQ(kappa(0.4, 10, 7), 4.6);
}

TEST(ClosedForms, DiversityRedundancyBeta) {
  EXPECT_DOUBLE_EQ(cache_diversity(0.0, 10, 7), 1.0);
  EXPECT_DOUBLE_EQ(cache_diversity(1.0, 10, 7), 0.0);
  EXPECT_DOUBLE_EQ(cache_diversity(0.5, 10, 7), 0.5);
  EXPECT_DOUBLE_EQ(cache_redundancy(0.0, 10, 7), 0.0);
  EXPECT_DOUBLE_EQ(cache_redundancy(1.0, 10, 7), 6.0 / 7.0);
  EXPECT_DOUBLE_EQ(beta_max(1.0, 7), 1.0);
  EXPECT_DOUBLE_EQ(beta_max(0.0, 7), 1.0 / 7.0);
  double last = 0;
  for (int i = 0; i <= 100; ++i) {
    const double b = beta_max(i / 100.0, 7);
    EXPECT_GE(b, last);
    last = b;
  }
}

TEST(ClosedForms, MeasuredClusterMatches) {
  const Network net = hex49();
  for (double alpha : {0.0, 0.1, 0.25, 0.5, 0.7, 1.0}) {
    const auto sel = solve_fap_placement(decreasing(1000), alpha, 10, 7);
    const Placement pl = build_placement(net, sel, 7, 2, 1);
    for (int c = 0; c < 7; ++c) {
      const ClusterStorage s = measure_cluster(pl, net, c);
      EXPECT_DOUBLE_EQ(s.diversity(), cache_diversity(alpha, 10, 7));
      EXPECT_DOUBLE_EQ(s.redundancy(), cache_redundancy(alpha, 10, 7));
      EXPECT_DOUBLE_EQ(cache_redundancy(pl, net, c), cache_redundancy(alpha, 10, 7));
      EXPECT_EQ(s.distinct_contents, static_cast<int>(std::lround(kappa(alpha, 10, 7) * 10)));
    }
  }
}

TEST(Placement, SegmentLookupAndCsv) {
  const Network net = hex49();
  const auto sel = solve_fap_placement(decreasing(100), 0.5, 2, 7);
  const Placement pl = build_placement(net, sel, 7, 2, 1);
  EXPECT_EQ(pl.segment_at(0, 1), -1);
  EXPECT_GE(pl.segment_at(0, 2), 0);
  EXPECT_EQ(pl.segment_at(0, 100), -1);
  std::ostringstream out;
  write_placement_csv(out, pl, net);
  const std::string s = out.str();
  EXPECT_EQ(s.rfind("fap_id,content_id,segment_id\n", 0), 0u);
  EXPECT_NE(s.find("0,1,FULL\n"), std::string::npos);
  int lines = 0;
  for (char ch : s) lines += ch == '\n';
  EXPECT_EQ(lines, 1 + 49 * (1 + 7));
}
