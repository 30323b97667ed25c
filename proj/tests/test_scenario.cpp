#include <gtest/gtest.h>

#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "ewlink/scenario.hpp"
#include "oracle.hpp"

namespace {

using namespace ewlink;
namespace fz = oracle::frozen;

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> fields;
    std::string f;
    std::istringstream ls(line);
    while (std::getline(ls, f, ',')) {
      fields.push_back(f);
    }
    if (!line.empty() && line.back() == ',') {
      fields.emplace_back();
    }
    out.push_back(fields);
  }
  return out;
}

TEST(ExpandRanges, Examples) {
  EXPECT_EQ(expand_ranges(RangeSweep{10, 100, 2, Spacing::kLog}), (std::vector<double>{10, 100}));
  const auto three = expand_ranges(RangeSweep{10, 1000, 3, Spacing::kLog});
  ASSERT_EQ(three.size(), 3u);
  EXPECT_EQ(three[0], 10.0);
  EXPECT_NEAR(three[1], 100.0, 1e-12);
  EXPECT_EQ(three[2], 1000.0);
  EXPECT_EQ(expand_ranges(baseline_ranges_km()), baseline_ranges_km());
  EXPECT_EQ(expand_ranges(RangeSweep{1, 5, 5, Spacing::kLinear}), (std::vector<double>{1, 2, 3, 4, 5}));
  EXPECT_EQ(expand_ranges(std::vector<double>{30, 10, 20}), (std::vector<double>{10, 20, 30}));
}

TEST(ExpandRanges, Errors) {
  EXPECT_THROW(expand_ranges(std::vector<double>{}), ConfigError);
  EXPECT_THROW(expand_ranges(std::vector<double>{10, 0}), ConfigError);
  EXPECT_THROW(expand_ranges(std::vector<double>{10, 20, 10}), ConfigError);
  EXPECT_THROW(expand_ranges(RangeSweep{10, 100, 1, Spacing::kLog}), ConfigError);
  EXPECT_THROW(expand_ranges(RangeSweep{100, 10, 3, Spacing::kLog}), ConfigError);
  EXPECT_THROW(expand_ranges(RangeSweep{-1, 10, 3, Spacing::kLinear}), ConfigError);
}

TEST(BaselineScenario, Parameters) {
  const Scenario s = baseline_scenario();
  EXPECT_NEAR(s.radar.antenna_tx.gain_db(), 40.59, 0.01);
  EXPECT_TRUE(s.radar.antenna_tx.is_beamwidth_defined());
  EXPECT_NEAR(noise_stack(s.radar.noise_model()).total_dbw, -108.98, 0.02);
  EXPECT_EQ(expand_ranges(s.ranges), (std::vector<double>{10, 12, 13.6, 15, 20, 29, 30, 70, 100, 250}));
  ASSERT_TRUE(s.jammer);
  EXPECT_FALSE(s.jammer->include_tx_gain);
  EXPECT_TRUE(baseline_scenario(JammerGainMode::kIncluded).jammer->include_tx_gain);
  ASSERT_EQ(s.targets.size(), 3u);
  EXPECT_EQ(s.targets[1].rcs_m2, 0.1);
  EXPECT_NO_THROW(s.validate());
}

TEST(Scenario, ValidationErrors) {
  Scenario s = baseline_scenario();
  s.targets.clear();
  EXPECT_THROW(s.validate(), ConfigError);
  s = baseline_scenario();
  s.targets.push_back(s.targets.front());
  EXPECT_THROW(s.validate(), ConfigError);
  s = baseline_scenario();
  s.radar.power_w = 0.0;
  EXPECT_THROW(s.validate(), ConfigError);
}

TEST(RunSweep, AnchorValues) {
  const auto rows = run_sweep(baseline_scenario());
  ASSERT_EQ(rows.size(), 10u);
  const SweepRow& r10 = rows.front();
  EXPECT_EQ(r10.range_km, 10.0);
  ASSERT_EQ(r10.cells.size(), 3u);
  EXPECT_EQ(r10.cells[2].name, "Mig-21");
  EXPECT_NEAR(r10.cells[2].snr_db, 33.12, 0.1);
  EXPECT_NEAR(r10.cells[2].snr_db, fz::kSnr3m2At10km, 1e-9);
  EXPECT_NEAR(*r10.cells[2].sjr_db, -30.05, 0.1);

  const SweepRow& r30 = rows[6];
  EXPECT_EQ(r30.range_km, 30.0);
  // R^-4 and sigma scaling from the 10 km anchor: 33.12 - 19.08 - 14.77.
  EXPECT_NEAR(r30.cells[1].snr_db, -0.74, 0.1);
  EXPECT_NEAR(r30.cells[1].snr_db, fz::kSnr01m2At30km, 1e-9);
}

TEST(RunSweep, NoJammer) {
  Scenario s = baseline_scenario();
  s.jammer.reset();
  for (const auto& row : run_sweep(s)) {
    EXPECT_FALSE(row.j_dbw);
    EXPECT_FALSE(row.jammer_gain_included);
    for (const auto& c : row.cells) {
      EXPECT_FALSE(c.sjr_db);
      EXPECT_FALSE(c.jsr_db);
    }
  }
}

TEST(RunSweep, ErrorNamesRangeAndTarget) {
  Scenario s = baseline_scenario();
  s.jammer->colocated_with_target = false;  // and no standoff range
  try {
    (void)run_sweep(s);
    FAIL() << "expected an error";
  } catch (const ConfigError& e) {
    EXPECT_NE(std::string(e.what()).find("jammer"), std::string::npos);
  }
}

TEST(RunSweepProperty, Invariants) {
  oracle::Gen gen(0x5e);
  for (int trial = 0; trial < 20; ++trial) {
    Scenario s = baseline_scenario(trial % 2 ? JammerGainMode::kIncluded : JammerGainMode::kExcluded);
    s.targets = {{"a", gen.log_uniform(1e-3, 1e2)}, {"b", gen.log_uniform(1e-3, 1e2)},
                 {"c", gen.log_uniform(1e-3, 1e2)}};
    s.ranges = RangeSweep{gen.uniform(1.0, 5.0), gen.uniform(100.0, 500.0), 40, Spacing::kLog};
    const auto rows = run_sweep(s);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const auto& row = rows[i];
      const double d0 = row.cells[0].snr_db - *row.cells[0].sjr_db;
      for (std::size_t t = 0; t < row.cells.size(); ++t) {
        const auto& c = row.cells[t];
        EXPECT_NEAR(c.snr_db - *c.sjr_db, d0, 1e-9);
        EXPECT_NEAR(c.snr_db - row.cells[0].snr_db, 10.0 * std::log10(c.rcs_m2 / row.cells[0].rcs_m2),
                    1e-9);
        EXPECT_NEAR(*c.sjr_db - *row.cells[0].sjr_db,
                    10.0 * std::log10(c.rcs_m2 / row.cells[0].rcs_m2), 1e-9);
        if (i > 0) {
          const auto& prev = rows[i - 1].cells[t];
          const double decades = std::log10(row.range_km / rows[i - 1].range_km);
          EXPECT_LT(c.snr_db, prev.snr_db);
          EXPECT_LT(*c.sjr_db, *prev.sjr_db);
          EXPECT_NEAR(c.snr_db - prev.snr_db, -40.0 * decades, 1e-9);
          EXPECT_NEAR(*c.sjr_db - *prev.sjr_db, -20.0 * decades, 1e-9);
        }
      }
    }
  }
}

TEST(RunSweep, Deterministic) {
  const auto a = export_csv(run_sweep(baseline_scenario()));
  const auto b = export_csv(run_sweep(baseline_scenario()));
  EXPECT_EQ(a, b);
}

TEST(ExportCsv, Shape) {
  const std::string csv = export_csv(run_sweep(baseline_scenario()));
  const auto table = parse_csv(csv);
  ASSERT_EQ(table.size(), 31u);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), kCsvHeader);
  EXPECT_EQ(table[1][0], "10.00");
  EXPECT_EQ(table[1][1], "F-35");
  EXPECT_EQ(table[1][2], "0.005");
  EXPECT_EQ(table[1][9], "false");
  EXPECT_EQ(table[3][1], "Mig-21");
  EXPECT_EQ(table[3][6], "33.12");
  EXPECT_EQ(table[3][8], "-30.05");
  EXPECT_EQ(table[3][7], "30.05");
  EXPECT_EQ(table[30][0], "250.00");
}

TEST(ExportCsv, NoJammerColumnsEmpty) {
  Scenario s = baseline_scenario();
  s.jammer.reset();
  const auto table = parse_csv(export_csv(run_sweep(s)));
  for (std::size_t i = 1; i < table.size(); ++i) {
    ASSERT_EQ(table[i].size(), 10u);
    EXPECT_TRUE(table[i][5].empty());
    EXPECT_TRUE(table[i][7].empty());
    EXPECT_TRUE(table[i][8].empty());
    EXPECT_TRUE(table[i][9].empty());
  }
}

TEST(ExportCsv, SelfConsistent) {
  for (auto mode : {JammerGainMode::kExcluded, JammerGainMode::kIncluded}) {
    const auto table = parse_csv(export_csv(run_sweep(baseline_scenario(mode))));
    for (std::size_t i = 1; i < table.size(); ++i) {
      const double p = std::stod(table[i][3]);
      const double n = std::stod(table[i][4]);
      const double snr = std::stod(table[i][6]);
      EXPECT_NEAR(p - n, snr, 0.01 + 1e-9);
      EXPECT_NEAR(std::stod(table[i][7]), -std::stod(table[i][8]), 1e-12);
    }
  }
}

}  // namespace
