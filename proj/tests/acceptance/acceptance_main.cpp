#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "ccuf/analytics.hpp"
#include "ccuf/config.hpp"
#include "ccuf/deployment.hpp"
#include "ccuf/placement.hpp"
#include "ccuf/popularity.hpp"
#include "ccuf/simulation.hpp"
#include "oracles.hpp"

using namespace ccuf;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;

  void check(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      notes.push_back("FAILED: " + what);
    }
  }
  void note(const std::string& s) { notes.push_back(s); }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

const std::vector<double> kAlphas{0.0, 0.1, 0.2, 0.4, 0.6, 0.8, 1.0};
const std::vector<double> kGammas{0.5, 0.6, 0.7, 0.8, 0.9, 1.0};
const std::vector<int> kSegments{2, 3, 7};

Outcome closed_forms() {
  Outcome o;
  const int nc = 1000;
  const int cf = 10;
  double worst = 0.0;
  std::string worst_at;
  auto cmp = [&](double got, const oracle::hp& want, const std::string& what) {
    const double e = oracle::rel_error(got, want);
    if (e > worst) {
      worst = e;
      worst_at = what;
    }
    o.check(e <= 1e-12, fmt::format("{} rel error {:.3g}", what, e));
  };
  for (double g : kGammas) {
    const auto hp = oracle::zipf(nc, g);
    const ZipfProfile z(nc, g);
    for (int l = 1; l <= nc; ++l)
      cmp(zipf_popularity(l, g, nc), hp[static_cast<std::size_t>(l - 1)], fmt::format("zipf l={} g={}", l, g));
    cmp(success_prob_uncoded(z, cf), oracle::success_uncoded(hp, cf), fmt::format("p_uc g={}", g));
    for (double a : kAlphas)
      for (int ns : kSegments) {
        const std::string at = fmt::format("a={} g={} ns={}", a, g, ns);
        cmp(success_prob_coded_simple(z, a, cf, ns), oracle::success_coded_simple(hp, a, cf, ns), "p_cc simple " + at);
        cmp(success_prob_coded_rw(z, a, cf, ns), oracle::success_coded_rw(hp, a, cf, ns), "p_cc rw " + at);
      }
  }
  for (double a : kAlphas)
    for (int ns : kSegments) {
      const std::string at = fmt::format("a={} ns={}", a, ns);
      cmp(kappa(a, cf, ns), oracle::kappa(a, cf, ns), "kappa " + at);
      cmp(cache_diversity(a, cf, ns), oracle::diversity(a, cf), "diversity " + at);
      cmp(beta_max(a, ns), oracle::beta_max(a, ns), "beta_max " + at);
    }
  for (int ns : kSegments)
    for (int n0 = 1; n0 <= ns; ++n0)
      cmp(p_new_segment(n0, ns), oracle::p_new_segment(n0, ns), fmt::format("p_ns n0={} ns={}", n0, ns));
  o.note(fmt::format("worst relative error {:.3g} ({})", worst, worst_at.empty() ? "exact" : worst_at));
  return o;
}

Outcome placement_oracle() {
  Outcome o;
  Rng rng = make_stream(2024, 0, Stream::kAnalytics, 2);
  int instances = 0;
  while (instances < 200) {
    const int nc = std::uniform_int_distribution<int>(1, 12)(rng);
    const int cf = std::uniform_int_distribution<int>(1, 4)(rng);
    const int ns = std::uniform_int_distribution<int>(1, 4)(rng);
    const double alpha = std::uniform_int_distribution<int>(0, 8)(rng) / 8.0;
    const int np = popular_count(alpha, cf);
    const int na = coded_content_count(alpha, cf, ns);
    if (np > 4 || na > 4) continue;
    std::vector<double> w(static_cast<std::size_t>(nc));
    for (auto& x : w) x = uniform01(rng);
    const int cu = std::uniform_int_distribution<int>(0, 4)(rng);
    const double uav = uav_objective(w, solve_uav_placement(w, cu));
    o.check(std::abs(uav - oracle::exhaustive_uav(w, cu)) <= 1e-12,
            fmt::format("UAV instance {} (N_c={}, C_u={})", instances, nc, cu));
    const auto sel = solve_fap_placement(w, alpha, cf, ns);
    for (bool sw : {false, true}) {
      const double got = fap_objective(w, sel, ns, sw);
      const double want = oracle::exhaustive_fap(w, np, na, sw ? 1.0 / ns : 1.0);
      o.check(std::abs(got - want) <= 1e-12,
              fmt::format("FAP instance {} (N_c={}, N_p={}, N_a={}, weighting={})", instances, nc, np, na, sw));
    }
    ++instances;
  }
  o.note(fmt::format("{} instances, both objective variants", instances));
  return o;
}

Outcome orthogonality_reuse() {
  Outcome o;
  const SimConfig cfg = default_config("desk");
  Rng rng = make_stream(0, 0, Stream::kTopology);
  const Network net = build_topology(cfg.topology, rng);
  const ZipfProfile z(cfg.catalog.catalog_size, cfg.catalog.gamma);
  const auto probs = z.probabilities();
  const std::vector<double> weights(probs.begin(), probs.end());
  const auto sel = solve_fap_placement(weights, cfg.catalog.alpha, cfg.topology.fap_cache_capacity, 7);
  const Placement pl = build_placement(net, sel, 7, 2, 1);
  const int rows = static_cast<int>(sel.mediocre.size());
  o.check(net.clusters().size() == 7, "seven inter-clusters");

  for (const auto& members : net.clusters()) {
    for (int l = 0; l < rows; ++l) {
      std::set<int> segs;
      for (std::size_t i = 0; i < members.size(); ++i) {
        const auto& zi = pl.per_fap[static_cast<std::size_t>(members[i])];
        int ones = 0;
        for (int s = 0; s < 7; ++s) ones += zi.at(l, s);
        o.check(ones == 1, "one nonzero per row");
        segs.insert(zi.segment(l));
        for (std::size_t j = 0; j < members.size(); ++j)
          if (i != j)
            o.check(row_dot(zi, pl.per_fap[static_cast<std::size_t>(members[j])], l) == 0,
                    fmt::format("orthogonality FAP {} vs {} row {}", members[i], members[j], l));
      }
      o.check(segs.size() == 7, "each segment once per cluster");
    }
  }

  // Neighbouring clusters share a lattice edge.
  std::map<int, std::set<int>> adjacent;
  for (const auto& f : net.faps())
    for (int n : net.lattice_neighbors(f.id))
      if (net.fap(n).cluster_id != f.cluster_id) adjacent[f.cluster_id].insert(net.fap(n).cluster_id);
  int pairs = 0;
  for (const auto& f : net.faps()) {
    for (int other : adjacent[f.cluster_id]) {
      int identical = 0;
      for (int g : net.cluster(other)) {
        if (pl.per_fap[static_cast<std::size_t>(g)] == pl.per_fap[static_cast<std::size_t>(f.id)]) {
          ++identical;
          o.check(hex_norm2(*net.fap(g).lattice - *f.lattice) == reuse_offset(2, 1),
                  fmt::format("FAP {} twin {} at reuse index 7", f.id, g));
        }
      }
      o.check(identical == 1, fmt::format("FAP {} has one twin in cluster {}", f.id, other));
      ++pairs;
    }
  }
  o.note(fmt::format("{} mediocre rows, {} FAP/neighbour-cluster pairs", rows, pairs));
  return o;
}

Outcome monte_carlo() {
  Outcome o;
  const int cf = 10;
  const int nc = 1000;
  const std::size_t trials = 100000;
  int index = 0;
  for (double a : {0.2, 0.5, 0.8})
    for (double g : {0.6, 0.8, 1.0}) {
      const ZipfProfile z(nc, g);
      SuccessProbInputs in;
      in.segments = 7;
      in.cache_capacity = cf;
      in.alpha = a;
      in.profile = &z;
      in.model = MobilityModel::kSimple;
      Rng rng = make_stream(4, 0, Stream::kAnalytics, static_cast<std::uint64_t>(index++));
      const auto est = monte_carlo_success(in, trials, rng);
      const double want = success_prob_coded_simple(z, a, cf, 7);
      o.note(fmt::format("simple a={} g={}: analytic {:.6f}, MC {:.6f} +- {:.6f}", a, g, want, est.mean, est.half_width));
      o.check(est.contains(want), fmt::format("simple MC a={} g={} outside 95% CI", a, g));
    }
  Rng rng = make_stream(4, 0, Stream::kAnalytics, 100);
  const auto est3 = monte_carlo_new_segment(7, 3, MobilityModel::kRandomWalk, trials, rng);
  o.note(fmt::format("random walk n0=3: analytic {:.6f}, MC {:.6f} +- {:.6f}", 5.0 / 6.0, est3.mean, est3.half_width));
  o.check(est3.contains(5.0 / 6.0), "random-walk new-segment frequency at n0=3");
  for (int n0 = 4; n0 <= 7; ++n0) {
    Rng r = make_stream(4, 0, Stream::kAnalytics, static_cast<std::uint64_t>(100 + n0));
    const auto e = monte_carlo_new_segment(7, n0, MobilityModel::kRandomWalk, trials, r);
    const double a = p_new_segment(n0, 7);
    o.note(fmt::format("random walk n0={} (reported): analytic {:.6f}, MC {:.6f} +- {:.6f}, gap {:+.6f}", n0, a, e.mean,
                       e.half_width, e.mean - a));
  }
  return o;
}

SimConfig load(const fs::path& dir, const std::string& name) {
  SimConfig c = load_config((dir / name).string());
  c.threads = 0;
  return c;
}

double mean_of(const PointResult& p, const char* metric) {
  for (const auto& d : metric_defs())
    if (std::string(d.name) == metric) return p.mean.*(d.member);
  throw std::invalid_argument(metric);
}

Outcome trends(const fs::path& configs) {
  Outcome o;
  {
    const SimConfig c = load(configs, "alpha_gamma.json");
    o.check(c.replications == 10 && c.seed == 0, "alpha_gamma.json uses 10 replications from seed 0");
    const MetricsReport r = run(c);
    // Points are gamma-major, alpha-minor.
    std::map<std::string, std::vector<const PointResult*>> by_gamma;
    std::vector<std::string> gammas;
    for (const auto& p : r.points) {
      if (!by_gamma.contains(p.values[0])) gammas.push_back(p.values[0]);
      by_gamma[p.values[0]].push_back(&p);
    }
    const auto& low = by_gamma.at(gammas.front());
    std::string hits;
    for (std::size_t i = 0; i < low.size(); ++i) {
      hits += fmt::format(" {:.4f}", mean_of(*low[i], "cache_hit_ratio"));
      if (i > 0)
        o.check(mean_of(*low[i], "cache_hit_ratio") < mean_of(*low[i - 1], "cache_hit_ratio"),
                fmt::format("hit ratio strictly decreasing in alpha at gamma={} (alpha={})", gammas.front(),
                            low[i]->values[1]));
    }
    o.note(fmt::format("hit ratio vs alpha at gamma={}:{}", gammas.front(), hits));
    const auto& high = by_gamma.at(gammas.back());
    const double uuf = mean_of(*high.back(), "cache_hit_ratio");
    const double ccuf = mean_of(*high.front(), "cache_hit_ratio");
    o.note(fmt::format("gamma={}: UUF {:.4f} vs conventional CCUF {:.4f}", gammas.back(), uuf, ccuf));
    o.check(uuf >= ccuf, "UUF >= conventional CCUF at the largest gamma");

    const double sinr0 = mean_of(*by_gamma.at(gammas.front()).front(), "mean_edge_sinr_db");
    for (const auto& g : gammas) {
      const auto& pts = by_gamma.at(g);
      o.check(mean_of(*pts.front(), "mean_edge_sinr_db") == sinr0,
              fmt::format("edge SINR at alpha=0 invariant across gamma (gamma={})", g));
      for (std::size_t i = 1; i < pts.size(); ++i) {
        o.check(mean_of(*pts[i], "mean_edge_sinr_db") >= mean_of(*pts[i - 1], "mean_edge_sinr_db"),
                fmt::format("edge SINR non-decreasing in alpha (gamma={}, alpha={})", g, pts[i]->values[1]));
        o.check(mean_of(*pts[i], "mean_access_delay") <= mean_of(*pts[i - 1], "mean_access_delay"),
                fmt::format("access delay non-increasing in alpha (gamma={}, alpha={})", g, pts[i]->values[1]));
      }
    }
    o.note(fmt::format("edge SINR at alpha=0: {:.4f} dB", sinr0));
  }
  {
    const MetricsReport r = run(load(configs, "psi.json"));
    std::string energies;
    for (std::size_t i = 0; i < r.points.size(); ++i) {
      const auto& p = r.points[i];
      energies += fmt::format(" {:.4g}", mean_of(p, "uav_energy_total"));
      if (i > 0)
        o.check(mean_of(p, "uav_energy_total") > mean_of(r.points[i - 1], "uav_energy_total"),
                fmt::format("UAV energy strictly increasing in psi (psi={})", p.values[0]));
      o.check(mean_of(p, "uav_delay_indoor") > mean_of(p, "uav_delay_outdoor"),
              fmt::format("indoor UAV delay above outdoor (psi={})", p.values[0]));
      o.check(mean_of(p, "uav_energy_indoor") > mean_of(p, "uav_energy_outdoor"),
              fmt::format("indoor UAV energy above outdoor (psi={})", p.values[0]));
    }
    const auto& last = r.points.back();
    o.note(fmt::format("UAV energy vs psi:{}", energies));
    o.note(fmt::format("psi=1 paired UAV delay indoor {:.4g} s vs outdoor {:.4g} s; energy {:.4g} J vs {:.4g} J",
                       mean_of(last, "uav_delay_indoor"), mean_of(last, "uav_delay_outdoor"),
                       mean_of(last, "uav_energy_indoor"), mean_of(last, "uav_energy_outdoor")));
  }
  {
    const MetricsReport r = run(load(configs, "zeta_fap.json"));
    std::string probs;
    for (std::size_t i = 0; i < r.points.size(); ++i) {
      const auto& p = r.points[i];
      const double h = mean_of(p, "handover_probability");
      probs += fmt::format(" {}:{:.4f}", p.values[0], h);
      if (i > 0)
        o.check(h >= mean_of(r.points[i - 1], "handover_probability"),
                fmt::format("FAP handover non-decreasing in zeta (zeta={})", p.values[0]));
      if (std::stod(p.values[0]) > 2.0) o.check(h == 1.0, fmt::format("FAP handover is 1 at zeta={}", p.values[0]));
    }
    o.note("FAP-connection handover vs zeta:" + probs);
  }
  {
    const MetricsReport r = run(load(configs, "zeta_uav.json"));
    std::string probs;
    for (const auto& p : r.points) {
      const double h = mean_of(p, "handover_probability");
      probs += fmt::format(" {}:{:.4f}", p.values[0], h);
      o.check(h == 0.0, fmt::format("UAV-connection handover is 0 at zeta={}", p.values[0]));
      o.check(mean_of(p, "uav_requests") > 0.0, fmt::format("HSUs served by UAVs at zeta={}", p.values[0]));
    }
    o.note("UAV-connection handover vs zeta:" + probs);
  }
  return o;
}

Outcome kmeans() {
  Outcome o;
  Rng rng = make_stream(6, 0, Stream::kDeployment);
  int runs = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const int n = std::uniform_int_distribution<int>(2, 200)(rng);
    const int k = std::uniform_int_distribution<int>(1, std::min(n, 10))(rng);
    std::vector<Vec2> pts;
    for (int i = 0; i < n; ++i) {
      const double a = 2 * M_PI * uniform01(rng), r = 250 * std::sqrt(uniform01(rng));
      pts.push_back({r * std::cos(a), r * std::sin(a)});
    }
    const auto c = kmeans_deploy(pts, k, 250, rng);
    for (std::size_t i = 1; i < c.objective_history.size(); ++i)
      o.check(c.objective_history[i] <= c.objective_history[i - 1],
              fmt::format("objective increased in run {} at iteration {}", trial, i));
    ++runs;
  }
  std::vector<Vec2> pts;
  for (int i = 0; i < 8; ++i) pts.push_back({-150.0 + 3.0 * (i % 4), 20.0 - 2.0 * i});
  for (int i = 0; i < 8; ++i) pts.push_back({150.0 - 3.0 * (i % 4), 20.0 - 2.0 * i});
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    Rng r = make_stream(seed, 0, Stream::kDeployment);
    const auto c = kmeans_deploy(pts, 2, 250, r);
    bool exact = c.assignment[0] != c.assignment[8];
    for (int i = 0; i < 16; ++i) exact = exact && c.assignment[static_cast<std::size_t>(i)] == c.assignment[i < 8 ? 0 : 8];
    o.check(exact, fmt::format("separable example partition (seed {})", seed));
  }
  o.note(fmt::format("{} random runs, separable example over 10 seeds", runs));
  return o;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Outcome determinism(const fs::path& binary) {
  Outcome o;
  const fs::path root = fs::temp_directory_path() / fmt::format("ccuf-acceptance-{}", std::random_device{}());
  std::vector<std::string> outputs;
  for (int i = 0; i < 2; ++i) {
    const fs::path out = root / std::to_string(i);
    const std::string cmd =
        fmt::format("\"{}\" run --profile desk --seed 7 --out \"{}\" > /dev/null", binary.string(), out.string());
    o.check(std::system(cmd.c_str()) == 0, "ccuf run exit status");
    outputs.push_back(slurp(out / "metrics.csv"));
  }
  o.check(!outputs[0].empty(), "metrics.csv written");
  o.check(outputs[0] == outputs[1], "metrics.csv byte-identical across runs");
  o.note(fmt::format("{} bytes of metrics.csv compared", outputs[0].size()));
  fs::remove_all(root);
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  fs::path binary = CCUF_BINARY;
  fs::path configs = CCUF_CONFIG_DIR;
  if (argc > 1) binary = argv[1];
  if (argc > 2) configs = argv[2];

  struct Criterion {
    int id;
    const char* name;
    double budget_s;
    std::function<Outcome()> body;
  };
  const std::vector<Criterion> criteria{
      {1, "closed-form exactness", 1.0, closed_forms},
      {2, "placement oracle equivalence", 30.0, placement_oracle},
      {3, "orthogonality and reuse", 5.0, orthogonality_reuse},
      {4, "Monte Carlo vs analytics", 120.0, monte_carlo},
      {5, "trend reproduction", 600.0, [&] { return trends(configs); }},
      {6, "k-means", 1.0, kmeans},
      {7, "determinism", 600.0, [&] { return determinism(binary); }},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = Clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o.check(false, std::string("exception: ") + e.what());
    }
    const double t = seconds_since(t0);
    o.check(t < c.budget_s, fmt::format("runtime {:.2f} s exceeds {:.0f} s", t, c.budget_s));
    std::cout << fmt::format("[{}] criterion {}: {} ({:.2f} s)\n", o.pass ? "PASS" : "FAIL", c.id, c.name, t);
    std::size_t shown = 0;
    for (const auto& n : o.notes) {
      if (n.rfind("FAILED", 0) == 0 && ++shown > 10) continue;
      std::cout << "    " << n << '\n';
    }
    std::cout.flush();
    failed += o.pass ? 0 : 1;
  }
  std::cout << fmt::format("{} of {} criteria passed\n", criteria.size() - static_cast<std::size_t>(failed),
                           criteria.size());
  return failed == 0 ? 0 : 1;
}
