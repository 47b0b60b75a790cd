#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "ccuf/analytics.hpp"
#include "ccuf/config.hpp"
#include "ccuf/network.hpp"
#include "ccuf/placement.hpp"
#include "ccuf/popularity.hpp"
#include "ccuf/report.hpp"
#include "ccuf/simulation.hpp"

namespace fs = std::filesystem;

namespace {

ccuf::SimConfig resolve_config(const std::string& path, const std::string& profile) {
  if (path.empty()) return ccuf::parse_config(nlohmann::json{{"profile", profile.empty() ? "desk" : profile}});
  return ccuf::load_config(path, profile);
}

// Writes to `path`, or stdout when it is empty or "-".
template <class F>
void emit(const std::string& path, F&& body) {
  if (path.empty() || path == "-") {
    body(std::cout);
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  body(out);
}

int cmd_run(const std::string& config_path, const std::string& profile, std::optional<std::uint64_t> seed,
            std::optional<int> replications, std::optional<int> horizon, std::optional<int> threads,
            const std::string& out_dir, const std::vector<std::string>& plots, bool events, bool snapshots) {
  auto cfg = resolve_config(config_path, profile);
  if (seed) cfg.seed = *seed;
  if (replications) cfg.replications = *replications;
  if (horizon) cfg.horizon_slots = *horizon;
  if (threads) cfg.threads = *threads;
  ccuf::validate(cfg);

  fs::create_directories(out_dir);
  std::ofstream ev_out;
  std::ofstream snap_out;
  ccuf::RunObserver observer;
  if (events || snapshots) {
    observer.want_traces = true;
    if (events) {
      ev_out.open(fs::path(out_dir) / "events.csv", std::ios::binary);
      ev_out << "point,replication,t,user,content,scheme,node,hit,delay,energy\n";
    }
    if (snapshots) {
      snap_out.open(fs::path(out_dir) / "clustering.csv", std::ios::binary);
      snap_out << "point,replication,epoch,user,cluster,centroid_x,centroid_y\n";
    }
    observer.on_trace = [&](std::size_t point, int rep, const ccuf::ReplicationTrace& tr) {
      if (events) {
        for (const auto& e : tr.events)
          ev_out << point << ',' << rep << ',' << e.slot << ',' << e.user << ',' << e.content << ','
                 << ccuf::to_string(e.scheme) << ',' << e.node << ',' << (e.hit ? 1 : 0) << ','
                 << ccuf::format_double(e.delay_s) << ',' << ccuf::format_double(e.energy_j) << '\n';
      }
      if (snapshots) {
        for (const auto& s : tr.snapshots) {
          std::ostringstream rows;
          ccuf::write_clustering_csv(rows, s.clustering, s.users, s.slot);
          std::istringstream lines(rows.str());
          for (std::string line; std::getline(lines, line);) snap_out << point << ',' << rep << ',' << line << '\n';
        }
      }
    };
  }

  const auto report = ccuf::run(cfg, &observer);
  ccuf::write_report_csv(fs::path(out_dir) / "metrics.csv", report);
  {
    std::ofstream cfg_out(fs::path(out_dir) / "config.json", std::ios::binary);
    cfg_out << nlohmann::json(cfg).dump(2) << '\n';
  }
  for (const auto& metric : plots) ccuf::write_svg_plot(fs::path(out_dir) / (metric + ".svg"), report, metric);
  std::cerr << "wrote " << (fs::path(out_dir) / "metrics.csv").string() << " (" << report.points.size()
            << " sweep points)\n";
  return 0;
}

int cmd_analytics(const std::vector<double>& alphas, const std::vector<double>& gammas, const std::vector<int>& ns,
                  int cf, int nc, std::size_t trials, std::uint64_t seed, const std::string& model_name,
                  const std::string& out) {
  const auto model = ccuf::mobility_from_string(model_name);
  emit(out, [&](std::ostream& os) {
    os << "alpha,gamma,N_s,p_uc,p_cc_simple,p_cc_rw_clamped,p_cc_rw_literal,mc_estimate,ci\n";
    std::uint64_t index = 0;
    for (double g : gammas) {
      const ccuf::ZipfProfile profile(nc, g);
      for (int s : ns) {
        for (double a : alphas) {
          ccuf::Rng rng = ccuf::make_stream(seed, 0, ccuf::Stream::kAnalytics, index++);
          const ccuf::SuccessProbInputs in{s, cf, a, &profile, model};
          const auto mc = ccuf::monte_carlo_success(in, trials, rng);
          os << ccuf::format_double(a) << ',' << ccuf::format_double(g) << ',' << s << ','
             << ccuf::format_double(ccuf::success_prob_uncoded(profile, cf)) << ','
             << ccuf::format_double(ccuf::success_prob_coded_simple(profile, a, cf, s)) << ','
             << ccuf::format_double(ccuf::success_prob_coded_rw(profile, a, cf, s, ccuf::RwMode::kClamped)) << ','
             << ccuf::format_double(ccuf::success_prob_coded_rw(profile, a, cf, s, ccuf::RwMode::kLiteral)) << ','
             << ccuf::format_double(mc.mean) << ',' << ccuf::format_double(mc.half_width) << '\n';
        }
      }
    }
  });
  return 0;
}

int cmd_placement(const std::string& config_path, const std::string& profile, const std::string& out) {
  const auto cfg = resolve_config(config_path, profile);
  ccuf::Rng rng = ccuf::make_stream(cfg.seed, 0, ccuf::Stream::kTopology);
  const auto net = ccuf::build_topology(cfg.topology, rng);
  const ccuf::ZipfProfile zipf(cfg.catalog.catalog_size, cfg.catalog.gamma);
  auto sel = ccuf::solve_fap_placement(zipf.probabilities(), cfg.catalog.alpha, cfg.topology.fap_cache_capacity,
                                       cfg.catalog.segments);
  const auto placement =
      ccuf::build_placement(net, std::move(sel), cfg.catalog.segments, cfg.scheduler.reuse_w, cfg.scheduler.reuse_z);
  emit(out, [&](std::ostream& os) { ccuf::write_placement_csv(os, placement, net); });
  return 0;
}

int cmd_topology(const std::string& config_path, const std::string& profile, const std::string& out) {
  const auto cfg = resolve_config(config_path, profile);
  ccuf::Rng rng = ccuf::make_stream(cfg.seed, 0, ccuf::Stream::kTopology);
  const auto net = ccuf::build_topology(cfg.topology, rng);
  emit(out, [&](std::ostream& os) { os << nlohmann::json(net).dump(2) << '\n'; });
  return 0;
}

int cmd_catalog(const std::string& config_path, const std::string& profile, const std::string& out) {
  const auto cfg = resolve_config(config_path, profile);
  const ccuf::ContentCatalog catalog(ccuf::ZipfProfile(cfg.catalog.catalog_size, cfg.catalog.gamma),
                                     cfg.catalog.segments, cfg.catalog.alpha, cfg.topology.fap_cache_capacity,
                                     cfg.catalog.file_size_mb);
  emit(out, [&](std::ostream& os) { ccuf::write_catalog_csv(os, catalog); });
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ccuf: coded UAV-aided femtocaching network simulator"};
  app.require_subcommand(1);

  std::string config_path;
  std::string profile;
  std::string out;

  auto* run = app.add_subcommand("run", "Simulate a configuration (with sweeps) and write metrics.csv");
  std::optional<std::uint64_t> seed;
  std::optional<int> replications, horizon, threads;
  std::string out_dir = "ccuf-out";
  std::vector<std::string> plots;
  bool events = false, snapshots = false;
  run->add_option("--config", config_path, "JSON config file")->check(CLI::ExistingFile);
  run->add_option("--profile", profile, "Scale profile")->check(CLI::IsMember({"desk", "paper"}));
  run->add_option("--seed", seed, "Master seed");
  run->add_option("--replications", replications, "Replications per sweep point");
  run->add_option("--horizon", horizon, "Slots per replication");
  run->add_option("--threads", threads, "Worker threads (0 = hardware concurrency)");
  run->add_option("--out", out_dir, "Output directory");
  run->add_option("--plot", plots, "Metric to plot as SVG (repeatable)");
  run->add_flag("--events", events, "Write the per-request event log");
  run->add_flag("--snapshots", snapshots, "Write K-means clustering snapshots");

  auto* analytics = app.add_subcommand("analytics", "Closed-form success probabilities with a Monte Carlo check");
  std::vector<double> alphas{0.0, 0.2, 0.4, 0.6, 0.8, 1.0};
  std::vector<double> gammas{0.5, 0.6, 0.7, 0.8, 0.9, 1.0};
  std::vector<int> ns{7};
  int cf = 10, nc = 1000;
  std::size_t trials = 100000;
  std::uint64_t a_seed = 0;
  std::string model = "simple";
  analytics->add_option("--alpha", alphas, "Alpha values")->delimiter(',');
  analytics->add_option("--gamma", gammas, "Zipf skew values")->delimiter(',');
  analytics->add_option("--ns", ns, "Segments per content")->delimiter(',');
  analytics->add_option("--cf", cf, "FAP cache capacity")->check(CLI::PositiveNumber);
  analytics->add_option("--nc", nc, "Catalog size")->check(CLI::PositiveNumber);
  analytics->add_option("--trials", trials, "Monte Carlo trials")->check(CLI::PositiveNumber);
  analytics->add_option("--seed", a_seed, "Seed");
  analytics->add_option("--model", model, "Walk model")->check(CLI::IsMember({"simple", "random_walk", "lattice_walk"}));
  analytics->add_option("--out", out, "Output CSV (default stdout)");

  auto* pdump = app.add_subcommand("placement-dump", "Write the FAP placement as CSV");
  auto* tdump = app.add_subcommand("topology-dump", "Write the network topology as JSON");
  auto* cdump = app.add_subcommand("catalog-dump", "Write the content catalog as CSV");
  for (auto* sub : {pdump, tdump, cdump}) {
    sub->add_option("--config", config_path, "JSON config file")->check(CLI::ExistingFile);
    sub->add_option("--profile", profile, "Scale profile")->check(CLI::IsMember({"desk", "paper"}));
    sub->add_option("--out", out, "Output file (default stdout)");
  }

  CLI11_PARSE(app, argc, argv);
  try {
    if (*run) return cmd_run(config_path, profile, seed, replications, horizon, threads, out_dir, plots, events, snapshots);
    if (*analytics) return cmd_analytics(alphas, gammas, ns, cf, nc, trials, a_seed, model, out);
    if (*pdump) return cmd_placement(config_path, profile, out);
    if (*tdump) return cmd_topology(config_path, profile, out);
    if (*cdump) return cmd_catalog(config_path, profile, out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
