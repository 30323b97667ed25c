#pragma once
#ifndef EWLINK_LINKS_HPP
#define EWLINK_LINKS_HPP

#include <cmath>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ewlink/db_units.hpp"
#include "ewlink/noise_stack.hpp"
#include "ewlink/propagation.hpp"

namespace ewlink {

//=#=#==#==#===============+=+=+=+=++=++++++++++++++-++-+--+-+----+---------------
// Actors

struct RadarSystem {
  double power_w = 1.0;
  AntennaSpec antenna_tx;
  AntennaSpec antenna_rx;
  double frequency_hz = 1e9;
  double bandwidth_hz = 1e6;
  double noise_figure_db = 0.0;
  double mod_db = 0.0;
  double temperature_k = constants::kReferenceTemperature;
  double detection_threshold_snr_db = 0.0;

  double power_dbw() const { return watts_to_dbw(power_w); }
  double wavelength_m() const { return wavelength_from_frequency(frequency_hz); }

  NoiseModel noise_model() const {
    return NoiseModel{temperature_k, bandwidth_hz, noise_figure_db, mod_db};
  }

  void validate() const {
    detail::require_positive(power_w, "radar power");
    detail::require_positive(frequency_hz, "radar frequency");
    (void)antenna_tx.gain_db();
    (void)antenna_rx.gain_db();
    noise_model().validate();
    detail::require_finite(detection_threshold_snr_db, "detection threshold");
  }

  friend bool operator==(const RadarSystem&, const RadarSystem&) = default;
};

struct JammerSystem {
  double power_w = 1.0;
  AntennaSpec antenna;
  double bandwidth_hz = 1e6;
  bool include_tx_gain = true;
  bool colocated_with_target = true;
  // Jammer-to-radar range, used only when the jammer is not riding on the
  // target.
  std::optional<double> standoff_range_km;

  double power_dbw() const { return watts_to_dbw(power_w); }

  // Range from the jammer to the radar when the target is at target_range_m.
  double range_to_radar_m(double target_range_m) const {
    if (colocated_with_target) {
      return target_range_m;
    }
    if (!standoff_range_km) {
      throw DomainError("a non-colocated jammer needs a standoff range");
    }
    return *standoff_range_km * 1e3;
  }

  void validate() const {
    detail::require_positive(power_w, "jammer power");
    detail::require_positive(bandwidth_hz, "jammer bandwidth");
    (void)antenna.gain_db();
    if (!colocated_with_target) {
      detail::require_positive(standoff_range_km.value_or(0.0), "jammer standoff range");
    }
  }

  friend bool operator==(const JammerSystem&, const JammerSystem&) = default;
};

enum class SignalKind { kPulsed, kCw };

struct RwrSystem {
  AntennaSpec antenna;
  std::optional<NoiseModel> noise;
  double pulsed_threshold_dbm = -40.0;
  double cw_threshold_dbm = -50.0;

  double threshold_dbm(SignalKind kind) const {
    return kind == SignalKind::kPulsed ? pulsed_threshold_dbm : cw_threshold_dbm;
  }

  void validate() const {
    (void)antenna.gain_db();
    if (noise) {
      noise->validate();
    }
    detail::require_finite(pulsed_threshold_dbm, "pulsed RWR threshold");
    detail::require_finite(cw_threshold_dbm, "CW RWR threshold");
  }

  friend bool operator==(const RwrSystem&, const RwrSystem&) = default;
};

//=#=#==#==#===============+=+=+=+=++=++++++++++++++-++-+--+-+----+---------------
// Budgets

enum class TermKind { kPower, kGain, kLoss, kBandwidthRatio };

struct BudgetTerm {
  std::string label;
  double db = 0.0;
  TermKind kind = TermKind::kGain;
  // Value before any clamping, kept for audit.
  std::optional<double> unclamped_db;
};

namespace label {
inline constexpr const char* kTxPower = "TX power";
inline constexpr const char* kTxGain = "TX gain";
inline constexpr const char* kFreeSpaceLoss = "free-space loss";
inline constexpr const char* kTargetGain = "target gain";
inline constexpr const char* kBandwidthRatio = "bandwidth ratio";
inline constexpr const char* kRxGain = "RX gain";
inline constexpr const char* kSpreading = "spherical spreading";
inline constexpr const char* kRcs = "radar cross section";
inline constexpr const char* kEffectiveArea = "effective area";
inline constexpr const char* kCollapsed = "received power (collapsed)";
}  // namespace label

/// An ordered chain of additive dB terms. Losses are stored already negated,
/// so the total is always the plain left-to-right sum of the terms.
class LinkBudget {
 public:
  LinkBudget& add(std::string label, double db, TermKind kind,
                  std::optional<double> unclamped_db = std::nullopt) {
    terms_.push_back(BudgetTerm{std::move(label), db, kind, unclamped_db});
    total_dbw_ += db;
    return *this;
  }

  LinkBudget& add_loss(std::string label, double loss_db) {
    return add(std::move(label), -loss_db, TermKind::kLoss);
  }

  const std::vector<BudgetTerm>& terms() const { return terms_; }
  double total_dbw() const { return total_dbw_; }
  double total_dbm() const { return dbw_to_dbm(total_dbw_); }

 private:
  std::vector<BudgetTerm> terms_;
  double total_dbw_ = 0.0;
};

// Terms in chain order, paired with the running total after each term.
inline std::vector<std::pair<BudgetTerm, double>> budget_breakdown(const LinkBudget& budget) {
  std::vector<std::pair<BudgetTerm, double>> out;
  out.reserve(budget.terms().size());
  double running = 0.0;
  for (const BudgetTerm& t : budget.terms()) {
    running += t.db;
    out.emplace_back(t, running);
  }
  return out;
}

//=#=#==#==#===============+=+=+=+=++=++++++++++++++-++-+--+-+----+---------------
// Telecom link

inline LinkBudget telecom_link(double p_tx_dbw, DbRatio g_tx, DbRatio g_rx,
                               const PathGeometry& geometry) {
  detail::require_finite(p_tx_dbw, "transmit power");
  const double loss = free_space_loss_db(geometry);
  LinkBudget b;
  b.add(label::kTxPower, p_tx_dbw, TermKind::kPower)
      .add(label::kTxGain, g_tx.db, TermKind::kGain)
      .add_loss(label::kFreeSpaceLoss, loss)
      .add(label::kRxGain, g_rx.db, TermKind::kGain);
  return b;
}

// P_rx = P_tx G_tx G_rx / L, all linear. Returns watts.
inline double telecom_link_linear_w(double p_tx_w, double g_tx, double g_rx,
                                    const PathGeometry& geometry) {
  geometry.validate();
  const double x = 4.0 * constants::kPi * geometry.range_m / geometry.wavelength_m;
  return p_tx_w * g_tx * g_rx / (x * x);
}

// Friis aperture form, P_rx/P_tx = A_tx A_rx / (lambda^2 R^2).
inline double friis_ratio(DbRatio g_tx, DbRatio g_rx, const PathGeometry& geometry) {
  geometry.validate();
  const double lambda = geometry.wavelength_m;
  const double r = geometry.range_m;
  return effective_area_m2(lambda, g_tx) * effective_area_m2(lambda, g_rx) /
         (lambda * lambda * r * r);
}

//=#=#==#==#===============+=+=+=+=++=++++++++++++++-++-+--+-+----+---------------
// Radar link

enum class RadarFormulation {
  kTargetGainChain,  // P + Gt - L + G_trg - L + Gr
  kStepwise,         // illuminate, backscatter, spread, intercept with A_eff
  kCollapsed,        // Pt Gt Gr sigma lambda^2 / ((4 pi)^3 R^4)
};

// Linear powers at each stage of the monostatic echo path.
struct RadarStages {
  double density_at_target_w_m2;
  double backscattered_w;       // P_tx G_tx sigma / (4 pi R^2)
  double density_at_radar_w_m2;  // ... / (4 pi R^2)
  double received_w;            // ... * A_eff
};

inline RadarStages radar_stages(const RadarSystem& radar, const TargetSpec& target,
                                double range_m) {
  detail::require_positive(range_m, "range");
  detail::require_positive(target.rcs_m2, "radar cross section");
  const double sphere = 4.0 * constants::kPi * range_m * range_m;
  RadarStages s{};
  s.density_at_target_w_m2 = radar.power_w * db_to_ratio(radar.antenna_tx.gain_db()) / sphere;
  s.backscattered_w = s.density_at_target_w_m2 * target.rcs_m2;
  s.density_at_radar_w_m2 = s.backscattered_w / sphere;
  s.received_w = s.density_at_radar_w_m2 *
                 effective_area_m2(radar.wavelength_m(), DbRatio{radar.antenna_rx.gain_db()});
  return s;
}

inline LinkBudget radar_link(const RadarSystem& radar, const TargetSpec& target, double range_m,
                             RadarFormulation formulation = RadarFormulation::kTargetGainChain) {
  detail::require_positive(range_m, "range");
  const double lambda = radar.wavelength_m();
  const double g_tx = radar.antenna_tx.gain_db();
  const double g_rx = radar.antenna_rx.gain_db();
  LinkBudget b;

  switch (formulation) {
    case RadarFormulation::kTargetGainChain: {
      const double loss = free_space_loss_db(PathGeometry{range_m, lambda});
      b.add(label::kTxPower, radar.power_dbw(), TermKind::kPower)
          .add(label::kTxGain, g_tx, TermKind::kGain)
          .add_loss(label::kFreeSpaceLoss, loss)
          .add(label::kTargetGain, target_gain(target.rcs_m2, lambda).db, TermKind::kGain)
          .add_loss(label::kFreeSpaceLoss, loss)
          .add(label::kRxGain, g_rx, TermKind::kGain);
      break;
    }
    case RadarFormulation::kStepwise: {
      detail::require_positive(target.rcs_m2, "radar cross section");
      const double spreading = 10.0 * std::log10(4.0 * constants::kPi * range_m * range_m);
      b.add(label::kTxPower, radar.power_dbw(), TermKind::kPower)
          .add(label::kTxGain, g_tx, TermKind::kGain)
          .add_loss(label::kSpreading, spreading)
          .add(label::kRcs, 10.0 * std::log10(target.rcs_m2), TermKind::kGain)
          .add_loss(label::kSpreading, spreading)
          .add(label::kEffectiveArea,
               10.0 * std::log10(effective_area_m2(lambda, DbRatio{g_rx})), TermKind::kGain);
      break;
    }
    case RadarFormulation::kCollapsed: {
      detail::require_positive(target.rcs_m2, "radar cross section");
      const double four_pi = 4.0 * constants::kPi;
      const double r2 = range_m * range_m;
      const double p_rx = radar.power_w * db_to_ratio(g_tx) * db_to_ratio(g_rx) *
                          target.rcs_m2 * lambda * lambda /
                          (four_pi * four_pi * four_pi * r2 * r2);
      b.add(label::kCollapsed, watts_to_dbw(p_rx), TermKind::kPower);
      break;
    }
  }
  return b;
}

//=#=#==#==#===============+=+=+=+=++=++++++++++++++-++-+--+-+----+---------------
// Radar warning receiver and jammer

// One-way radar -> RWR link at the platform.
inline LinkBudget rwr_link(const RadarSystem& radar, const RwrSystem& rwr, double range_m) {
  return telecom_link(radar.power_dbw(), DbRatio{radar.antenna_tx.gain_db()},
                      DbRatio{rwr.antenna.gain_db()},
                      PathGeometry{range_m, radar.wavelength_m()});
}

// 10 log10(B_radar / B_jammer). Clamped at 0 dB: a jammer narrower than the
// radar's passband gets no bonus for it.
inline double bandwidth_ratio_db(double radar_bandwidth_hz, double jammer_bandwidth_hz) {
  return std::min(0.0, ratio_to_db(radar_bandwidth_hz / jammer_bandwidth_hz));
}

/// Jamming power J at the radar receiver, with the jammer `range_m` from the
/// radar. Main-lobe coupling is assumed on the radar side (G_rx).
inline LinkBudget jammer_link(const JammerSystem& jammer, const RadarSystem& radar,
                              double range_m) {
  detail::require_positive(range_m, "jammer range");
  detail::require_positive(radar.bandwidth_hz, "radar bandwidth");
  detail::require_positive(jammer.bandwidth_hz, "jammer bandwidth");
  const double literal = ratio_to_db(radar.bandwidth_hz / jammer.bandwidth_hz);
  const double clamped = bandwidth_ratio_db(radar.bandwidth_hz, jammer.bandwidth_hz);

  LinkBudget b;
  b.add(label::kTxPower, jammer.power_dbw(), TermKind::kPower);
  if (jammer.include_tx_gain) {
    b.add(label::kTxGain, jammer.antenna.gain_db(), TermKind::kGain);
  }
  b.add_loss(label::kFreeSpaceLoss,
             free_space_loss_db(PathGeometry{range_m, radar.wavelength_m()}));
  b.add(label::kBandwidthRatio, clamped, TermKind::kBandwidthRatio,
        literal != clamped ? std::optional<double>{literal} : std::nullopt);
  b.add(label::kRxGain, radar.antenna_rx.gain_db(), TermKind::kGain);
  return b;
}

}  // namespace ewlink

#endif  // EWLINK_LINKS_HPP
