#include <gtest/gtest.h>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "ewlink/cli.hpp"
#include "ewlink/svg_plot.hpp"

namespace {

using namespace ewlink;
namespace fs = std::filesystem;

struct Run {
  int status;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int status = cli::dispatch(args, out, err);
  return {status, out.str(), err.str()};
}

const std::string kCompat = EWLINK_CONFIG_DIR "/baseline_compat.cfg";
const std::string kFaithful = EWLINK_CONFIG_DIR "/baseline_faithful.cfg";

double value_after(const std::string& text, const std::string& key) {
  const auto pos = text.find(key);
  EXPECT_NE(pos, std::string::npos) << key << " not in\n" << text;
  return std::stod(text.substr(pos + key.size()));
}

fs::path temp_dir() {
  const auto dir = fs::temp_directory_path() / ("ewlink_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()));
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

TEST(Cli, RadarBreakdown) {
  const auto r = run({"radar", "--config", kCompat, "--range-km", "10", "--target", "Mig-21"});
  ASSERT_EQ(r.status, 0) << r.err;
  EXPECT_TRUE(r.err.empty());
  EXPECT_NEAR(value_after(r.out, "P_rx = "), -75.86, 0.05);
  EXPECT_NEAR(value_after(r.out, "SNR = "), 33.12, 0.01);
  for (const char* l : {label::kTxPower, label::kTxGain, label::kFreeSpaceLoss, label::kTargetGain,
                        label::kRxGain}) {
    EXPECT_NE(r.out.find(l), std::string::npos) << l;
  }
  // Six term lines: two free-space loss legs.
  std::size_t count = 0;
  for (auto p = r.out.find(label::kFreeSpaceLoss); p != std::string::npos;
       p = r.out.find(label::kFreeSpaceLoss, p + 1)) {
    ++count;
  }
  EXPECT_EQ(count, 2u);

  for (const char* f : {"stepwise", "collapsed"}) {
    const auto alt = run({"radar", "--config", kCompat, "--range-km", "10", "--target", "Mig-21",
                          "--formulation", f});
    ASSERT_EQ(alt.status, 0);
    EXPECT_NEAR(value_after(alt.out, "P_rx = "), -75.86, 0.05);
  }
}

TEST(Cli, Burnthrough) {
  const auto r = run({"burnthrough", "--config", kCompat, "--target", "Mig-21", "--threshold-db", "0"});
  ASSERT_EQ(r.status, 0) << r.err;
  EXPECT_NEAR(value_after(r.out, "Mig-21: "), 314.0, 2.0);
  EXPECT_NE(r.out.find(" km)"), std::string::npos);
  const auto b = run({"burnthrough", "--config", kCompat, "--target", "Mig-21", "--method", "bisection"});
  ASSERT_EQ(b.status, 0);
  EXPECT_NEAR(value_after(b.out, "Mig-21: "), 314.59, 1.0);
  const auto f = run({"burnthrough", "--config", kFaithful, "--target", "Mig-21"});
  EXPECT_NEAR(value_after(f.out, "Mig-21: "), 23.2, 0.5);
}

TEST(Cli, RwrAndJamAndLink) {
  const auto w = run({"rwr", "--config", EWLINK_CONFIG_DIR "/rwr_example.cfg", "--range-km", "100"});
  ASSERT_EQ(w.status, 0) << w.err;
  EXPECT_NEAR(value_after(w.out, "dBW ("), -20.23, 0.05);
  EXPECT_NEAR(value_after(w.out, "margin = "), 19.77, 0.05);
  EXPECT_NE(w.out.find("detectable"), std::string::npos);
  EXPECT_NE(w.out.find("RWR SNR"), std::string::npos);

  const auto j = run({"jam", "--config", kFaithful, "--range-km", "10", "--target", "Mig-21"});
  ASSERT_EQ(j.status, 0) << j.err;
  EXPECT_NEAR(value_after(j.out, "J = "), -23.18, 0.05);
  EXPECT_NEAR(value_after(j.out, "JSR = "), 52.68, 0.05);
  EXPECT_NEAR(value_after(j.out, "SJR = "), -52.68, 0.05);

  const auto l = run({"link", "--p-tx-dbw", "10", "--range-km", "1", "--frequency-hz", "1e9"});
  ASSERT_EQ(l.status, 0) << l.err;
  EXPECT_NEAR(value_after(l.out, "P_rx = "), -82.45, 0.01);
  const auto lw = run({"link", "--p-tx-w", "10", "--range-km", "1", "--frequency-hz", "1e9"});
  EXPECT_NEAR(value_after(lw.out, "P_rx = "), -82.45, 0.01);
}

TEST(Cli, SweepToStdoutIsPureCsv) {
  const auto r = run({"sweep", "--config", kCompat});
  ASSERT_EQ(r.status, 0) << r.err;
  EXPECT_TRUE(r.err.empty());
  EXPECT_EQ(r.out, export_csv(run_sweep(baseline_scenario())));
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 31);
}

TEST(Cli, SweepWritesFiles) {
  const auto dir = temp_dir();
  const auto csv = dir / "t1.csv";
  const auto svg = dir / "t1.svg";
  const auto r = run({"sweep", "--config", kCompat, "--out", csv.string(), "--plot", svg.string()});
  ASSERT_EQ(r.status, 0) << r.err;
  EXPECT_TRUE(r.out.empty());
  const std::string text = slurp(csv);
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 31);
  const std::string plot = slurp(svg);
  EXPECT_EQ(plot.rfind("<?xml", 0), 0u);
  EXPECT_NE(plot.find("</svg>"), std::string::npos);
  fs::remove_all(dir);
}

TEST(Cli, ExitCodes) {
  const auto missing = run({"radar", "--config", "/nonexistent.cfg", "--range-km", "10"});
  EXPECT_EQ(missing.status, cli::kConfigError);
  EXPECT_TRUE(missing.out.empty());
  EXPECT_FALSE(missing.err.empty());

  const auto bad_target = run({"radar", "--config", kCompat, "--range-km", "10", "--target", "nope"});
  EXPECT_EQ(bad_target.status, cli::kConfigError);

  const auto domain = run({"radar", "--config", kCompat, "--range-km", "-1", "--target", "B-2"});
  EXPECT_EQ(domain.status, cli::kDomainError);
  EXPECT_TRUE(domain.out.empty());
  EXPECT_NE(domain.err.find("domain error"), std::string::npos);

  const auto link_domain = run({"link", "--range-km", "1", "--frequency-hz", "0"});
  EXPECT_EQ(link_domain.status, cli::kDomainError);

  EXPECT_EQ(run({"frobnicate"}).status, cli::kConfigError);
  EXPECT_EQ(run({}).status, cli::kConfigError);
  EXPECT_EQ(run({"--help"}).status, cli::kOk);

  const auto dir = temp_dir();
  const auto cfg = dir / "no_jammer.cfg";
  std::ofstream(cfg) << "[radar]\npower_w = 1\nfrequency_hz = 1e9\ngain_db = 0\nbandwidth_hz = 1\n"
                        "[target]\nname = t\nrcs_m2 = 1\n[sweep]\nranges_km = 1\n";
  EXPECT_EQ(run({"burnthrough", "--config", cfg.string()}).status, cli::kConfigError);
  EXPECT_EQ(run({"jam", "--config", cfg.string(), "--range-km", "1"}).status, cli::kConfigError);
  fs::remove_all(dir);
}

std::vector<std::pair<double, double>> polyline_points(const std::string& svg, std::size_t index,
                                                       const std::string& cls) {
  const std::regex re("<polyline class=\"series " + cls + "\"[^>]*points=\"([^\"]*)\"");
  auto it = std::sregex_iterator(svg.begin(), svg.end(), re);
  std::advance(it, static_cast<long>(index));
  std::vector<std::pair<double, double>> pts;
  std::istringstream in((*it)[1].str());
  std::string pair;
  while (in >> pair) {
    const auto comma = pair.find(',');
    pts.emplace_back(std::stod(pair.substr(0, comma)), std::stod(pair.substr(comma + 1)));
  }
  return pts;
}

std::size_t count_of(const std::string& s, const std::string& needle) {
  std::size_t n = 0;
  for (auto p = s.find(needle); p != std::string::npos; p = s.find(needle, p + 1)) ++n;
  return n;
}

TEST(RenderPlot, BaselineSeries) {
  const auto rows = run_sweep(baseline_scenario());
  const std::string svg = render_plot(rows);
  EXPECT_EQ(count_of(svg, "<polyline class=\"series"), 6u);
  EXPECT_EQ(count_of(svg, "class=\"threshold\""), 1u);
  EXPECT_NE(svg.find("SNR Mig-21 (sigma=3 m^2)"), std::string::npos);
  EXPECT_NE(svg.find("SJR F-35 (sigma=0.005 m^2)"), std::string::npos);
  EXPECT_EQ(svg, render_plot(rows));

  // SVG y grows downward: a falling SNR has rising y.
  for (std::size_t t = 0; t < 3; ++t) {
    const auto pts = polyline_points(svg, t, "snr");
    ASSERT_EQ(pts.size(), rows.size());
    for (std::size_t i = 1; i < pts.size(); ++i) {
      EXPECT_GT(pts[i].first, pts[i - 1].first);
      EXPECT_GT(pts[i].second, pts[i - 1].second);
    }
  }
}

TEST(RenderPlot, SingleTargetNoJammer) {
  Scenario s = baseline_scenario();
  s.jammer.reset();
  s.targets = {{"solo", 2.0}};
  const auto series = plot_series(run_sweep(s));
  ASSERT_EQ(series.size(), 1u);
  EXPECT_EQ(series[0].metric, "snr");
  const std::string svg = render_plot(run_sweep(s), PlotSpec{false});
  EXPECT_EQ(count_of(svg, "<polyline class=\"series"), 1u);
}

TEST(RenderPlot, EmptyRowsRejected) {
  EXPECT_THROW(render_plot({}), UsageError);
}

}  // namespace
