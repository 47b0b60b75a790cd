#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <sstream>

#include "ccuf/config.hpp"
#include "ccuf/report.hpp"

using namespace ccuf;
using nlohmann::json;

namespace {

bool message_mentions(const std::function<void()>& f, const std::string& needle) {
  try {
    f();
  } catch (const ConfigError& e) {
    return std::string(e.what()).find(needle) != std::string::npos;
  }
  return false;
}

}  // namespace

TEST(Config, Profiles) {
  const SimConfig desk = default_config("desk");
  EXPECT_EQ(desk.topology.fap_count, 49);
  EXPECT_NO_THROW(validate(desk));
  const SimConfig paper = default_config("paper");
  EXPECT_EQ(paper.topology.fap_count, 175);
  EXPECT_EQ(paper.catalog.catalog_size, 40724);
  EXPECT_NO_THROW(validate(paper));
  EXPECT_THROW(default_config("huge"), ConfigError);
}

TEST(Config, SlotDefaultsToRangeOverThreshold) {
  const SimConfig c = default_config();
  EXPECT_DOUBLE_EQ(c.slot_seconds(), 30.0 / 1.5);
  EXPECT_DOUBLE_EQ(c.server_tx_power_dbm(), c.topology.uav_tx_power_dbm);
}

TEST(Config, JsonRoundTrip) {
  SimConfig c = default_config();
  c.seed = 99;
  c.catalog.alpha = 0.25;
  c.scheduler.routing = Routing::kShare;
  c.sweep.push_back({"catalog.gamma", {0.5, 1.0}});
  const json j = c;
  const SimConfig back = parse_config(j);
  EXPECT_EQ(json(back), j);
  EXPECT_TRUE(j["radio"]["server_tx_power_dbm"].is_null());
}

TEST(Config, UnknownFieldsRejected) {
  EXPECT_TRUE(message_mentions([] { parse_config(json{{"catalog", {{"alpah", 0.3}}}}); }, "catalog.alpah"));
  EXPECT_TRUE(message_mentions([] { parse_config(json{{"bogus", 1}}); }, "bogus"));
}

TEST(Config, ValidationNamesField) {
  EXPECT_TRUE(message_mentions([] { parse_config(json{{"catalog", {{"alpha", 1.5}}}}); }, "catalog.alpha"));
  EXPECT_TRUE(message_mentions([] { parse_config(json{{"catalog", {{"segments", 5}}}}); }, "catalog.segments"));
  EXPECT_TRUE(message_mentions([] { parse_config(json{{"topology", {{"fap_count", 50}}}}); }, "topology.fap_count"));
  EXPECT_TRUE(message_mentions([] { parse_config(json{{"catalog", {{"gamma", "high"}}}}); }, "catalog.gamma"));
}

TEST(Config, SweepExpandsCrossProduct) {
  SimConfig c = default_config();
  c.sweep.push_back({"catalog.gamma", {0.5, 1.0}});
  c.sweep.push_back({"catalog.alpha", {0.0, 0.5, 1.0}});
  const auto pts = expand_sweep(c);
  ASSERT_EQ(pts.size(), 6u);
  EXPECT_DOUBLE_EQ(pts[0].config.catalog.gamma, 0.5);
  EXPECT_DOUBLE_EQ(pts[0].config.catalog.alpha, 0.0);
  EXPECT_DOUBLE_EQ(pts[5].config.catalog.gamma, 1.0);
  EXPECT_DOUBLE_EQ(pts[5].config.catalog.alpha, 1.0);
  EXPECT_TRUE(pts[3].config.sweep.empty());
  EXPECT_EQ(expand_sweep(default_config()).size(), 1u);
}

TEST(Config, SweepOfUnknownParameterRejected) {
  EXPECT_THROW(parse_config(json{{"sweep", {{{"parameter", "catalog.nope"}, {"values", {1}}}}}}), ConfigError);
}

TEST(Config, WithParameter) {
  const SimConfig c = with_parameter(default_config(), "mobility.model", "simple");
  EXPECT_EQ(c.mobility.model, MobilityModel::kSimple);
  EXPECT_THROW(with_parameter(default_config(), "mobility.speed", 1), ConfigError);
}

TEST(Report, DoubleFormattingRoundTrips) {
  for (double x : {0.0, 0.1, 1.0 / 3.0, 6.02e23, -1e-300, 17.25}) EXPECT_EQ(parse_double(format_double(x)), x);
  EXPECT_EQ(format_double(std::numeric_limits<double>::quiet_NaN()), "nan");
  EXPECT_EQ(format_double(std::numeric_limits<double>::infinity()), "inf");
  EXPECT_TRUE(std::isnan(parse_double("nan")));
}

TEST(Report, CsvRoundTrip) {
  MetricsReport r;
  r.axes = {"catalog.alpha"};
  for (int p = 0; p < 2; ++p) {
    PointResult pt;
    pt.values = {p == 0 ? "0.1" : "0.9"};
    for (int k = 0; k < 3; ++k) {
      ReplicationMetrics m;
      m.cache_hit_ratio = 0.1 * k + p;
      m.mean_access_delay = 1.0 / (k + 1);
      m.uav_delay_indoor = std::numeric_limits<double>::quiet_NaN();
      pt.runs.push_back(m);
    }
    aggregate(pt);
    r.points.push_back(pt);
  }
  std::ostringstream out;
  write_report_csv(out, r);
  std::istringstream in(out.str());
  const MetricsReport back = read_report_csv(in);
  std::ostringstream again;
  write_report_csv(again, back);
  EXPECT_EQ(out.str(), again.str());
  EXPECT_EQ(out.str().rfind("point,catalog.alpha,replication,kind,", 0), 0u);
}

TEST(Report, AggregateUsesStudentT) {
  PointResult pt;
  for (double x : {1.0, 2.0, 3.0}) {
    ReplicationMetrics m;
    m.cache_hit_ratio = x;
    pt.runs.push_back(m);
  }
  aggregate(pt);
  EXPECT_DOUBLE_EQ(pt.mean.cache_hit_ratio, 2.0);
  // t_{0.975, 2} = 4.302652729749464, sd = 1.
  EXPECT_NEAR(pt.ci95.cache_hit_ratio, 4.302652729749464 / std::sqrt(3.0), 1e-12);
}

TEST(Report, SvgMentionsMetric) {
  MetricsReport r;
  r.axes = {"catalog.alpha"};
  for (const char* v : {"0", "0.5", "1"}) {
    PointResult pt;
    pt.values = {v};
    ReplicationMetrics m;
    m.cache_hit_ratio = 0.5;
    pt.runs = {m, m};
    aggregate(pt);
    r.points.push_back(pt);
  }
  std::ostringstream out;
  write_svg_plot(out, r, "cache_hit_ratio");
  EXPECT_NE(out.str().find("<svg"), std::string::npos);
  EXPECT_NE(out.str().find("cache_hit_ratio"), std::string::npos);
}
