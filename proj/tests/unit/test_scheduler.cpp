#include <gtest/gtest.h>

#include <cmath>

#include "ccuf/scheduler.hpp"

using namespace ccuf;

TEST(Scheme, SelectionTable) {
  EXPECT_EQ(select_fap_scheme(ContentClass::kPopular, Region::kCellCore, false), Scheme::kST);
  EXPECT_EQ(select_fap_scheme(ContentClass::kPopular, Region::kCellEdge, false), Scheme::kJT);
  EXPECT_EQ(select_fap_scheme(ContentClass::kPopular, Region::kCellEdge, true), Scheme::kJT);
  EXPECT_EQ(select_fap_scheme(ContentClass::kMediocre, Region::kCellCore, true), Scheme::kPT);
  EXPECT_EQ(select_fap_scheme(ContentClass::kMediocre, Region::kCellEdge, false), Scheme::kST);
  EXPECT_EQ(select_fap_scheme(ContentClass::kNonPopular, Region::kCellEdge, true), Scheme::kST);
}

TEST(Scheme, FastOutdoorUsersGoToUav) {
  SchemeInputs in;
  in.speed_mps = 1.5;
  EXPECT_EQ(select_scheme(in), Scheme::kUavServe);
  in.indoor = true;
  EXPECT_EQ(select_scheme(in), Scheme::kST);
  in.indoor = false;
  in.speed_mps = 1.49;
  EXPECT_EQ(select_scheme(in), Scheme::kST);
}

TEST(Delay, ShannonRateAndTransfer) {
  EXPECT_DOUBLE_EQ(shannon_rate(1.0, 1e6), 1e6);
  EXPECT_DOUBLE_EQ(shannon_rate(3.0, 1e6), 2e6);
  EXPECT_DOUBLE_EQ(transfer_delay(4e6, 3.0, 1e6), 2.0);
  EXPECT_THROW(shannon_rate(0.0, 1e6), std::invalid_argument);
  EXPECT_THROW(shannon_rate(1.0, 0.0), std::invalid_argument);
}

TEST(Delay, MissesCostMore) {
  EXPECT_DOUBLE_EQ(fap_delay(false, 3.0, 4e6, 1e6, 0.5), 2.5);
  EXPECT_DOUBLE_EQ(fap_delay(true, 3.0, 4e6, 1e6, 0.5), 2.0);
  EXPECT_DOUBLE_EQ(uav_delay(true, 3.0, 1.0, 4e6, 1e6), 2.0);
  EXPECT_DOUBLE_EQ(uav_delay(false, 3.0, 1.0, 4e6, 1e6), 6.0);
}

TEST(Delay, ExpectedUavDelayMixesByCachedMass) {
  const ZipfProfile z(4, 0.0);
  UavCacheSelection c;
  c.selected = {1, 2};
  EXPECT_DOUBLE_EQ(expected_uav_delay(c, z, 1.0, 3.0), 2.0);
}

TEST(Energy, StepFormula) {
  EnergyParams p;
  p.tx_w_per_mb = 0.5;
  p.rx_w_per_mb = 0.25;
  p.pause_s = 2;
  p.flyby_s = 5;
  p.hover_los_w = 0.1;
  p.hover_nlos_w = 0.2;
  EXPECT_DOUBLE_EQ(uav_energy_step(10, p, true), 10 * 0.5 * 2 + 10 * 0.25 * 2 + 0.1 * 3);
  EXPECT_DOUBLE_EQ(uav_energy_step(10, p, false), 10 * 0.5 * 2 + 10 * 0.25 * 2 + 0.2 * 3);
}

TEST(Energy, ValidationNamesField) {
  EnergyParams p;
  p.flyby_s = 0.5;
  p.pause_s = 1.0;
  try {
    p.validate();
    FAIL();
  } catch (const std::invalid_argument& e) {
    EXPECT_NE(std::string(e.what()).find("flyby_s"), std::string::npos);
  }
  p = {};
  p.hover_los_w = -1;
  EXPECT_THROW(p.validate(), std::invalid_argument);
}

TEST(Energy, BatteryRejectsOverdraw) {
  UavBattery b(10.0);
  EXPECT_TRUE(b.draw(4.0));
  EXPECT_TRUE(b.draw(6.0));
  EXPECT_DOUBLE_EQ(b.remaining(), 0.0);
  EXPECT_FALSE(b.depleted());
  EXPECT_FALSE(b.draw(0.1));
  EXPECT_TRUE(b.depleted());
  EXPECT_FALSE(b.draw(0.0));
  EXPECT_DOUBLE_EQ(b.drawn(), 10.0);
}

TEST(Handover, StraightPathLeavesDisc) {
  const Vec2 fap{0, 0};
  const auto stay = straight_trajectory({0, 0}, 0.3, 1.0, 20.0);
  EXPECT_FALSE(detect_handover(stay, fap, 30.0));
  const auto leave = straight_trajectory({0, 0}, 0.3, 2.0, 20.0);
  EXPECT_TRUE(detect_handover(leave, fap, 30.0));
  const auto edge = straight_trajectory({-30, 0}, 0.0, 3.0, 20.0);
  EXPECT_FALSE(detect_handover(edge, fap, 30.0));
}

TEST(Handover, LongPathAlwaysLeaves) {
  Rng rng(4);
  for (int i = 0; i < 1000; ++i) {
    const double a = 2 * M_PI * uniform01(rng), rho = 30 * std::sqrt(uniform01(rng));
    const auto path =
        straight_trajectory({rho * std::cos(a), rho * std::sin(a)}, 2 * M_PI * uniform01(rng), 61.0 / 20.0, 20.0);
    EXPECT_TRUE(detect_handover(path, Vec2{0, 0}, 30.0));
  }
}
