#pragma once
#ifndef EWLINK_NOISE_METRICS_HPP
#define EWLINK_NOISE_METRICS_HPP

#include <cmath>
#include <optional>

#include "ewlink/db_units.hpp"
#include "ewlink/links.hpp"
#include "ewlink/noise_stack.hpp"

namespace ewlink {

inline double snr_db(double p_rx_dbw, double n_total_dbw) { return p_rx_dbw - n_total_dbw; }

//=#=#==#==#===============+=+=+=+=++=++++++++++++++-++-+--+-+----+---------------
// Radar warning receiver

struct RwrDetection {
  bool detectable = false;
  double margin_db = 0.0;  // received power above the sensitivity threshold
};

// Sensitivity test: detectable iff the received power reaches the threshold.
inline RwrDetection rwr_detectable(const PowerLevel& p_rwr, SignalKind kind,
                                   const RwrSystem& rwr) {
  const double margin = p_rwr.in_dbm() - rwr.threshold_dbm(kind);
  return RwrDetection{margin >= 0.0, margin};
}

inline double rwr_snr_db(double p_rwr_dbw, const NoiseModel& rwr_noise) {
  return p_rwr_dbw - noise_stack(rwr_noise).total_dbw;
}

//=#=#==#==#===============+=+=+=+=++=++++++++++++++-++-+--+-+----+---------------
// Jamming ratios

// kApproximate drops the receiver noise next to the jamming power; kExact
// power-sums them first.
enum class RatioMode { kApproximate, kExact };

inline double jsr_db(double j_dbw, double p_rx_dbw, std::optional<double> n_total_dbw,
                     RatioMode mode = RatioMode::kApproximate) {
  if (mode == RatioMode::kApproximate) {
    return j_dbw - p_rx_dbw;
  }
  if (!n_total_dbw) {
    throw UsageError("exact JSR/SJR needs the receiver noise total");
  }
  return power_sum_db(*n_total_dbw, j_dbw) - p_rx_dbw;
}

inline double sjr_db(double p_rx_dbw, double j_dbw, std::optional<double> n_total_dbw,
                     RatioMode mode = RatioMode::kApproximate) {
  return -jsr_db(j_dbw, p_rx_dbw, n_total_dbw, mode);
}

//=#=#==#==#===============+=+=+=+=++=++++++++++++++-++-+--+-+----+---------------
// One engagement cell

struct EngagementMetrics {
  double p_rx_dbw = 0.0;
  double n_total_dbw = 0.0;
  std::optional<double> j_dbw;
  double snr_db = 0.0;
  std::optional<double> jsr_db;
  std::optional<double> sjr_db;
};

inline EngagementMetrics evaluate_engagement(const RadarSystem& radar,
                                             const std::optional<JammerSystem>& jammer,
                                             const TargetSpec& target, double range_m,
                                             RatioMode mode = RatioMode::kApproximate) {
  EngagementMetrics m;
  m.p_rx_dbw = radar_link(radar, target, range_m).total_dbw();
  m.n_total_dbw = noise_stack(radar.noise_model()).total_dbw;
  m.snr_db = snr_db(m.p_rx_dbw, m.n_total_dbw);
  if (jammer) {
    m.j_dbw = jammer_link(*jammer, radar, jammer->range_to_radar_m(range_m)).total_dbw();
    m.jsr_db = jsr_db(*m.j_dbw, m.p_rx_dbw, m.n_total_dbw, mode);
    m.sjr_db = sjr_db(m.p_rx_dbw, *m.j_dbw, m.n_total_dbw, mode);
  }
  return m;
}

//=#=#==#==#===============+=+=+=+=++=++++++++++++++-++-+--+-+----+---------------
// Burnthrough

inline constexpr double kBurnthroughMinRangeM = 1.0;
inline constexpr double kBurnthroughMaxRangeM = 1e7;

// Approximate-mode SJR of the target echo at range_m.
inline double engagement_sjr_db(const RadarSystem& radar, const JammerSystem& jammer,
                                const TargetSpec& target, double range_m) {
  const double p_rx = radar_link(radar, target, range_m).total_dbw();
  const double j = jammer_link(jammer, radar, jammer.range_to_radar_m(range_m)).total_dbw();
  return sjr_db(p_rx, j, std::nullopt);
}

/// Self-protection jammer: the echo falls 40 dB/decade and the jamming
/// 20 dB/decade, so SJR falls exactly 20 dB/decade and the crossing has a
/// closed form from any reference range.
inline std::optional<double> burnthrough_range_closed_form(const RadarSystem& radar,
                                                           const JammerSystem& jammer,
                                                           const TargetSpec& target,
                                                           double sjr_threshold_db = 0.0,
                                                           double reference_range_m = 1e4) {
  if (!jammer.colocated_with_target) {
    throw UsageError("closed-form burnthrough needs a jammer colocated with the target");
  }
  const double at_ref = engagement_sjr_db(radar, jammer, target, reference_range_m);
  const double range = reference_range_m * std::pow(10.0, (at_ref - sjr_threshold_db) / 20.0);
  if (range < kBurnthroughMinRangeM || range > kBurnthroughMaxRangeM) {
    return std::nullopt;
  }
  return range;
}

// Bisection on log10(R) over [1 m, 1e7 m]. Works for any geometry in which
// SJR decreases with target range.
inline std::optional<double> burnthrough_range_bisection(const RadarSystem& radar,
                                                         const JammerSystem& jammer,
                                                         const TargetSpec& target,
                                                         double sjr_threshold_db = 0.0) {
  auto excess = [&](double log_r) {
    return engagement_sjr_db(radar, jammer, target, std::pow(10.0, log_r)) - sjr_threshold_db;
  };
  double lo = std::log10(kBurnthroughMinRangeM);
  double hi = std::log10(kBurnthroughMaxRangeM);
  double f_lo = excess(lo);
  const double f_hi = excess(hi);
  if (f_lo < 0.0 || f_hi > 0.0) {
    return std::nullopt;
  }
  for (int i = 0; i < 200 && hi - lo > 1e-13; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double f_mid = excess(mid);
    if (f_mid >= 0.0) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
  }
  return std::pow(10.0, 0.5 * (lo + hi));
}

enum class BurnthroughMethod { kAuto, kClosedForm, kBisection };

inline std::optional<double> burnthrough_range(const RadarSystem& radar,
                                               const JammerSystem& jammer,
                                               const TargetSpec& target,
                                               double sjr_threshold_db = 0.0,
                                               BurnthroughMethod method = BurnthroughMethod::kAuto) {
  const bool closed = method == BurnthroughMethod::kClosedForm ||
                      (method == BurnthroughMethod::kAuto && jammer.colocated_with_target);
  if (closed) {
    return burnthrough_range_closed_form(radar, jammer, target, sjr_threshold_db);
  }
  return burnthrough_range_bisection(radar, jammer, target, sjr_threshold_db);
}

}  // namespace ewlink

#endif  // EWLINK_NOISE_METRICS_HPP
