#pragma once
#ifndef EWLINK_SCENARIO_HPP
#define EWLINK_SCENARIO_HPP

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ewlink/links.hpp"
#include "ewlink/noise_metrics.hpp"

namespace ewlink {

// Invalid scenario or configuration. `line` is 0 when the problem is not tied
// to a particular input line.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(const std::string& message, std::string key = {}, int line = 0)
      : std::runtime_error(format(message, key, line)), key_{std::move(key)}, line_{line} {}

  const std::string& key() const { return key_; }
  int line() const { return line_; }

 private:
  static std::string format(const std::string& message, const std::string& key, int line) {
    std::string out;
    if (line > 0) {
      out += "line " + std::to_string(line) + ": ";
    }
    if (!key.empty()) {
      out += key + ": ";
    }
    return out + message;
  }

  std::string key_;
  int line_;
};

//=#=#==#==#===============+=+=+=+=++=++++++++++++++-++-+--+-+----+---------------
// Ranges

enum class Spacing { kLinear, kLog };

struct RangeSweep {
  double start_km = 0.0;
  double stop_km = 0.0;
  int count = 0;
  Spacing spacing = Spacing::kLinear;

  friend bool operator==(const RangeSweep&, const RangeSweep&) = default;
};

using RangeSpec = std::variant<std::vector<double>, RangeSweep>;

/// Expand a range spec into strictly increasing kilometre values. Explicit
/// lists are sorted; duplicates and non-positive entries are rejected.
inline std::vector<double> expand_ranges(const RangeSpec& spec) {
  if (const auto* list = std::get_if<std::vector<double>>(&spec)) {
    if (list->empty()) {
      throw ConfigError("range list is empty", "sweep.ranges_km");
    }
    std::vector<double> out = *list;
    for (double r : out) {
      if (!(r > 0.0) || !std::isfinite(r)) {
        throw ConfigError("ranges must be positive", "sweep.ranges_km");
      }
    }
    std::sort(out.begin(), out.end());
    if (std::adjacent_find(out.begin(), out.end()) != out.end()) {
      throw ConfigError("duplicate range in list", "sweep.ranges_km");
    }
    return out;
  }

  const auto& sweep = std::get<RangeSweep>(spec);
  if (sweep.count < 2) {
    throw ConfigError("a generated sweep needs count >= 2", "sweep.count");
  }
  if (!(sweep.start_km > 0.0) || !std::isfinite(sweep.start_km)) {
    throw ConfigError("start must be positive", "sweep.start_km");
  }
  if (!(sweep.stop_km > sweep.start_km) || !std::isfinite(sweep.stop_km)) {
    throw ConfigError("stop must be greater than start", "sweep.stop_km");
  }
  std::vector<double> out(static_cast<std::size_t>(sweep.count));
  const double n = sweep.count - 1;
  for (int i = 0; i < sweep.count; ++i) {
    if (sweep.spacing == Spacing::kLog) {
      const double a = std::log10(sweep.start_km);
      const double b = std::log10(sweep.stop_km);
      out[i] = std::pow(10.0, a + (b - a) * i / n);
    } else {
      out[i] = sweep.start_km + (sweep.stop_km - sweep.start_km) * i / n;
    }
  }
  // Pin the endpoints so pow() round-off cannot move them.
  out.front() = sweep.start_km;
  out.back() = sweep.stop_km;
  return out;
}

//=#=#==#==#===============+=+=+=+=++=++++++++++++++-++-+--+-+----+---------------
// Scenario

struct Scenario {
  RadarSystem radar;
  std::optional<JammerSystem> jammer;
  std::optional<RwrSystem> rwr;
  std::vector<TargetSpec> targets;
  RangeSpec ranges = std::vector<double>{};
  RatioMode ratio_mode = RatioMode::kApproximate;

  const TargetSpec* find_target(const std::string& name) const {
    for (const auto& t : targets) {
      if (t.name == name) {
        return &t;
      }
    }
    return nullptr;
  }

  void validate() const {
    try {
      radar.validate();
    } catch (const DomainError& e) {
      throw ConfigError(e.what(), "radar");
    }
    if (jammer) {
      try {
        jammer->validate();
      } catch (const DomainError& e) {
        throw ConfigError(e.what(), "jammer");
      }
    }
    if (rwr) {
      try {
        rwr->validate();
      } catch (const DomainError& e) {
        throw ConfigError(e.what(), "rwr");
      }
    }
    if (targets.empty()) {
      throw ConfigError("at least one target is required", "targets");
    }
    std::set<std::string> names;
    for (const auto& t : targets) {
      if (t.name.empty()) {
        throw ConfigError("target name is empty", "targets");
      }
      if (!names.insert(t.name).second) {
        throw ConfigError("duplicate target name '" + t.name + "'", "targets");
      }
      if (!(t.rcs_m2 > 0.0) || !std::isfinite(t.rcs_m2)) {
        throw ConfigError("target '" + t.name + "' needs a positive RCS", "targets");
      }
    }
    (void)expand_ranges(ranges);
  }

  friend bool operator==(const Scenario&, const Scenario&) = default;
};

//=#=#==#==#===============+=+=+=+=++=++++++++++++++-++-+--+-+----+---------------
// Sweep

struct TargetCell {
  std::string name;
  double rcs_m2 = 0.0;
  double p_rx_dbw = 0.0;
  double snr_db = 0.0;
  std::optional<double> jsr_db;
  std::optional<double> sjr_db;
};

struct SweepRow {
  double range_km = 0.0;
  double n_total_dbw = 0.0;
  std::optional<double> j_dbw;
  std::optional<bool> jammer_gain_included;
  RatioMode ratio_mode = RatioMode::kApproximate;
  std::vector<TargetCell> cells;  // in target declaration order
};

inline std::vector<SweepRow> run_sweep(const Scenario& scenario) {
  scenario.validate();
  std::vector<SweepRow> rows;
  for (double range_km : expand_ranges(scenario.ranges)) {
    SweepRow row;
    row.range_km = range_km;
    row.ratio_mode = scenario.ratio_mode;
    if (scenario.jammer) {
      row.jammer_gain_included = scenario.jammer->include_tx_gain;
    }
    for (const auto& target : scenario.targets) {
      EngagementMetrics m;
      try {
        m = evaluate_engagement(scenario.radar, scenario.jammer, target, range_km * 1e3,
                                scenario.ratio_mode);
      } catch (const DomainError& e) {
        char where[128];
        std::snprintf(where, sizeof(where), "at %g km, target '%s': ", range_km,
                      target.name.c_str());
        throw DomainError(where + std::string(e.what()));
      }
      row.n_total_dbw = m.n_total_dbw;
      row.j_dbw = m.j_dbw;
      row.cells.push_back(
          TargetCell{target.name, target.rcs_m2, m.p_rx_dbw, m.snr_db, m.jsr_db, m.sjr_db});
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

//=#=#==#==#===============+=+=+=+=++=++++++++++++++-++-+--+-+----+---------------
// The early-warning radar vs. escort-jammer engagement

enum class JammerGainMode { kExcluded, kIncluded };

inline const std::vector<double>& baseline_ranges_km() {
  static const std::vector<double> ranges{10, 12, 13.6, 15, 20, 29, 30, 70, 100, 250};
  return ranges;
}

/// L-band early-warning radar (24.6 kW, 1.3 GHz, 0.18 x 20 degree fan beam,
/// 100 MHz, NF 5 dB, MOD 10 dB) against three targets carrying a 6.8 kW,
/// 22.63 dB, 1 GHz barrage jammer.
///
/// The default excludes the jammer antenna gain from the jamming link, which
/// is the setting that reproduces the reference table.
inline Scenario baseline_scenario(JammerGainMode gain_mode = JammerGainMode::kExcluded) {
  Scenario s;
  s.radar.power_w = 24600.0;
  s.radar.frequency_hz = 1.3e9;
  s.radar.antenna_tx = AntennaSpec::from_beamwidths(0.18, 20.0, 1.0);
  s.radar.antenna_rx = s.radar.antenna_tx;
  s.radar.bandwidth_hz = 100e6;
  s.radar.noise_figure_db = 5.0;
  s.radar.mod_db = 10.0;

  JammerSystem jam;
  jam.power_w = 6800.0;
  jam.antenna = AntennaSpec::from_gain_db(22.63);
  jam.bandwidth_hz = 1e9;
  jam.include_tx_gain = gain_mode == JammerGainMode::kIncluded;
  s.jammer = jam;

  s.targets = {{"F-35", 0.005}, {"B-2", 0.1}, {"Mig-21", 3.0}};
  s.ranges = baseline_ranges_km();
  return s;
}

//=#=#==#==#===============+=+=+=+=++=++++++++++++++-++-+--+-+----+---------------
// CSV

inline constexpr const char* kCsvHeader =
    "range_km,target,rcs_m2,p_rx_dbw,n_total_dbw,j_dbw,snr_db,jsr_db,sjr_db,"
    "jammer_gain_included";

namespace detail {

inline std::string fixed2(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  // Avoid "-0.00".
  if (std::string_view(buf) == "-0.00") {
    return "0.00";
  }
  return buf;
}

inline std::string fixed2(const std::optional<double>& v) { return v ? fixed2(*v) : std::string{}; }

// Shortest representation that round-trips; RCS values such as 0.005 m^2
// would not survive two fixed decimals.
inline std::string shortest(double v) {
  char buf[64];
  for (int precision = 1; precision <= 17; ++precision) {
    std::snprintf(buf, sizeof(buf), "%.*g", precision, v);
    if (std::strtod(buf, nullptr) == v) {
      break;
    }
  }
  return buf;
}

}  // namespace detail

inline std::string export_csv(const std::vector<SweepRow>& rows) {
  std::string out = kCsvHeader;
  out += '\n';
  for (const auto& row : rows) {
    for (const auto& cell : row.cells) {
      out += detail::fixed2(row.range_km) + ',';
      out += cell.name + ',';
      out += detail::shortest(cell.rcs_m2) + ',';
      out += detail::fixed2(cell.p_rx_dbw) + ',';
      out += detail::fixed2(row.n_total_dbw) + ',';
      out += detail::fixed2(row.j_dbw) + ',';
      out += detail::fixed2(cell.snr_db) + ',';
      out += detail::fixed2(cell.jsr_db) + ',';
      out += detail::fixed2(cell.sjr_db) + ',';
      if (row.jammer_gain_included) {
        out += *row.jammer_gain_included ? "true" : "false";
      }
      out += '\n';
    }
  }
  return out;
}

}  // namespace ewlink

#endif  // EWLINK_SCENARIO_HPP
