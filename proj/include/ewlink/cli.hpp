#pragma once
#ifndef EWLINK_CLI_HPP
#define EWLINK_CLI_HPP

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iterator>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "ewlink/config.hpp"
#include "ewlink/links.hpp"
#include "ewlink/noise_metrics.hpp"
#include "ewlink/scenario.hpp"
#include "ewlink/svg_plot.hpp"

namespace ewlink::cli {

enum ExitCode : int { kOk = 0, kConfigError = 1, kDomainError = 2 };

namespace detail {

inline std::string f2(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

inline Scenario load_scenario(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ConfigError("cannot open config file '" + path + "'");
  }
  const std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  return parse_config(text);
}

inline void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out || !out.write(content.data(), static_cast<std::streamsize>(content.size()))) {
    throw ConfigError("cannot write '" + path + "'");
  }
}

inline const TargetSpec& require_target(const Scenario& s, const std::string& name) {
  if (name.empty()) {
    if (s.targets.size() == 1) {
      return s.targets.front();
    }
    throw ConfigError("--target is required when the scenario has several targets", "targets");
  }
  if (const TargetSpec* t = s.find_target(name)) {
    return *t;
  }
  throw ConfigError("no target named '" + name + "'", "targets");
}

inline void print_budget(std::ostream& out, const LinkBudget& budget) {
  char line[160];
  std::snprintf(line, sizeof(line), "  %-28s %12s %12s\n", "term", "dB", "running");
  out << line;
  for (const auto& [term, running] : budget_breakdown(budget)) {
    std::snprintf(line, sizeof(line), "  %-28s %12.2f %12.2f", term.label.c_str(), term.db,
                  running);
    out << line;
    if (term.unclamped_db) {
      out << "  (unclamped " << f2(*term.unclamped_db) << ")";
    }
    out << '\n';
  }
}

}  // namespace detail

/// Run one command. `args` excludes the program name. Data goes to `out`,
/// diagnostics to `err`.
inline int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  using detail::f2;

  CLI::App app{"Radar / jammer link-budget calculator and engagement sweep", "ewsim"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  // link
  double link_p_dbw = 0.0, link_p_w = 0.0, link_gtx = 0.0, link_grx = 0.0;
  double link_range_km = 0.0, link_freq = 0.0;
  auto* link = app.add_subcommand("link", "One-way telecom link budget");
  auto* p_dbw_opt = link->add_option("--p-tx-dbw", link_p_dbw, "Transmit power [dBW]");
  auto* p_w_opt = link->add_option("--p-tx-w", link_p_w, "Transmit power [W]");
  p_dbw_opt->excludes(p_w_opt);
  link->add_option("--g-tx-db", link_gtx, "Transmit antenna gain [dB]");
  link->add_option("--g-rx-db", link_grx, "Receive antenna gain [dB]");
  link->add_option("--range-km", link_range_km, "Range [km]")->required();
  link->add_option("--frequency-hz", link_freq, "Carrier frequency [Hz]")->required();

  // scenario-driven commands share these
  std::string config_path, target_name, formulation = "chain", kind = "pulsed",
                                        method = "auto", out_path, plot_path;
  double range_km = 0.0, threshold_db = 0.0;
  bool linear_x = false;

  auto* radar = app.add_subcommand("radar", "Two-way radar echo budget and SNR");
  radar->add_option("--config", config_path, "Scenario file")->required();
  radar->add_option("--range-km", range_km, "Target range [km]")->required();
  radar->add_option("--target", target_name, "Target name");
  radar->add_option("--formulation", formulation, "chain | stepwise | collapsed")
      ->check(CLI::IsMember({"chain", "stepwise", "collapsed"}));

  auto* rwr = app.add_subcommand("rwr", "Radar warning receiver link and sensitivity check");
  rwr->add_option("--config", config_path, "Scenario file")->required();
  rwr->add_option("--range-km", range_km, "Radar to platform range [km]")->required();
  rwr->add_option("--kind", kind, "pulsed | cw")->check(CLI::IsMember({"pulsed", "cw"}));

  auto* jam = app.add_subcommand("jam", "Jamming power at the radar, with JSR/SJR");
  jam->add_option("--config", config_path, "Scenario file")->required();
  jam->add_option("--range-km", range_km, "Target range [km]")->required();
  jam->add_option("--target", target_name, "Target name (for JSR/SJR)");

  auto* sweep = app.add_subcommand("sweep", "Range sweep to CSV, optionally with an SVG plot");
  sweep->add_option("--config", config_path, "Scenario file")->required();
  sweep->add_option("--out", out_path, "CSV output path (default: standard output)");
  sweep->add_option("--plot", plot_path, "SVG plot output path");
  sweep->add_flag("--linear-x", linear_x, "Linear range axis in the plot");

  auto* burn = app.add_subcommand("burnthrough", "Range at which SJR reaches a threshold");
  burn->add_option("--config", config_path, "Scenario file")->required();
  burn->add_option("--target", target_name, "Target name");
  burn->add_option("--threshold-db", threshold_db, "SJR threshold [dB]");
  burn->add_option("--method", method, "auto | closed-form | bisection")
      ->check(CLI::IsMember({"auto", "closed-form", "bisection"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kConfigError;
  }

  try {
    if (link->parsed()) {
      const double p = p_w_opt->count() ? watts_to_dbw(link_p_w) : link_p_dbw;
      const auto budget = telecom_link(p, DbRatio{link_gtx}, DbRatio{link_grx},
                                       PathGeometry::from_frequency(link_range_km * 1e3, link_freq));
      out << "telecom link at " << f2(link_range_km) << " km\n";
      detail::print_budget(out, budget);
      out << "P_rx = " << f2(budget.total_dbw()) << " dBW (" << f2(budget.total_dbm())
          << " dBm)\n";
      return kOk;
    }

    const Scenario scenario = detail::load_scenario(config_path);

    if (radar->parsed()) {
      const TargetSpec& target = detail::require_target(scenario, target_name);
      const RadarFormulation form = formulation == "stepwise"    ? RadarFormulation::kStepwise
                                    : formulation == "collapsed" ? RadarFormulation::kCollapsed
                                                                 : RadarFormulation::kTargetGainChain;
      const auto budget = radar_link(scenario.radar, target, range_km * 1e3, form);
      const auto noise = noise_stack(scenario.radar.noise_model());
      out << "radar echo: " << target.name << " (sigma=" << ewlink::detail::shortest(target.rcs_m2)
          << " m^2) at " << f2(range_km) << " km, " << formulation << " formulation\n";
      detail::print_budget(out, budget);
      out << "P_rx = " << f2(budget.total_dbw()) << " dBW (" << f2(budget.total_dbm())
          << " dBm)\n";
      out << "N_total = " << f2(noise.total_dbw) << " dBW (johnson " << f2(noise.johnson_dbw)
          << ", receiver " << f2(noise.receiver_dbw) << ")\n";
      const double snr = snr_db(budget.total_dbw(), noise.total_dbw);
      out << "SNR = " << f2(snr) << " dB ("
          << (snr >= scenario.radar.detection_threshold_snr_db ? "above" : "below")
          << " detection threshold " << f2(scenario.radar.detection_threshold_snr_db) << " dB)\n";
      return kOk;
    }

    if (rwr->parsed()) {
      const RwrSystem rwr_sys = scenario.rwr.value_or(RwrSystem{});
      const auto budget = rwr_link(scenario.radar, rwr_sys, range_km * 1e3);
      const SignalKind sk = kind == "cw" ? SignalKind::kCw : SignalKind::kPulsed;
      const auto det = rwr_detectable(PowerLevel::dbw(budget.total_dbw()), sk, rwr_sys);
      out << "RWR link at " << f2(range_km) << " km\n";
      detail::print_budget(out, budget);
      out << "P_rwr = " << f2(budget.total_dbw()) << " dBW (" << f2(budget.total_dbm())
          << " dBm)\n";
      out << kind << " threshold = " << f2(rwr_sys.threshold_dbm(sk)) << " dBm, margin = "
          << f2(det.margin_db) << " dB, " << (det.detectable ? "detectable" : "not detectable")
          << '\n';
      if (rwr_sys.noise) {
        out << "RWR SNR = " << f2(rwr_snr_db(budget.total_dbw(), *rwr_sys.noise))
            << " dB (informational; sensitivity is the primary RWR metric)\n";
      }
      return kOk;
    }

    if (jam->parsed()) {
      if (!scenario.jammer) {
        throw ConfigError("scenario has no [jammer] section", "jammer");
      }
      const JammerSystem& j = *scenario.jammer;
      const double jam_range_m = j.range_to_radar_m(range_km * 1e3);
      const auto budget = jammer_link(j, scenario.radar, jam_range_m);
      out << "jammer link at " << f2(jam_range_m / 1e3) << " km (jammer TX gain "
          << (j.include_tx_gain ? "included" : "excluded") << ")\n";
      detail::print_budget(out, budget);
      out << "J = " << f2(budget.total_dbw()) << " dBW (" << f2(budget.total_dbm()) << " dBm)\n";
      if (!target_name.empty() || scenario.targets.size() == 1) {
        const TargetSpec& target = detail::require_target(scenario, target_name);
        const auto m = evaluate_engagement(scenario.radar, scenario.jammer, target, range_km * 1e3,
                                           RatioMode::kApproximate);
        const double sjr_exact =
            sjr_db(m.p_rx_dbw, *m.j_dbw, m.n_total_dbw, RatioMode::kExact);
        out << "P_rx(" << target.name << ") = " << f2(m.p_rx_dbw) << " dBW\n";
        out << "JSR = " << f2(*m.jsr_db) << " dB\n";
        out << "SJR = " << f2(*m.sjr_db) << " dB (exact with noise: " << f2(sjr_exact)
            << " dB)\n";
      }
      return kOk;
    }

    if (sweep->parsed()) {
      const auto rows = run_sweep(scenario);
      const std::string csv = export_csv(rows);
      if (out_path.empty()) {
        out << csv;
      } else {
        detail::write_file(out_path, csv);
      }
      if (!plot_path.empty()) {
        PlotSpec spec;
        spec.log_x = !linear_x;
        spec.threshold_db = scenario.radar.detection_threshold_snr_db;
        detail::write_file(plot_path, render_plot(rows, spec));
      }
      return kOk;
    }

    if (burn->parsed()) {
      if (!scenario.jammer) {
        throw ConfigError("scenario has no [jammer] section", "jammer");
      }
      const TargetSpec& target = detail::require_target(scenario, target_name);
      const BurnthroughMethod m = method == "closed-form" ? BurnthroughMethod::kClosedForm
                                  : method == "bisection" ? BurnthroughMethod::kBisection
                                                          : BurnthroughMethod::kAuto;
      const auto range = burnthrough_range(scenario.radar, *scenario.jammer, target,
                                           threshold_db, m);
      if (!range) {
        out << "no burnthrough for " << target.name << " within [1 m, 10000 km] at SJR threshold "
            << f2(threshold_db) << " dB\n";
        return kOk;
      }
      char km[32];
      std::snprintf(km, sizeof(km), "%.4f", *range / 1e3);
      out << "burnthrough range for " << target.name << ": " << f2(*range) << " m (" << km
          << " km) at SJR threshold " << f2(threshold_db) << " dB, jammer TX gain "
          << (scenario.jammer->include_tx_gain ? "included" : "excluded") << '\n';
      return kOk;
    }
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kConfigError;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kConfigError;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << '\n';
    return kDomainError;
  }
  return kConfigError;
}

}  // namespace ewlink::cli

#endif  // EWLINK_CLI_HPP
