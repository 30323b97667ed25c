#pragma once
#ifndef EWLINK_NOISE_STACK_HPP
#define EWLINK_NOISE_STACK_HPP

#include <cmath>

#include "ewlink/db_units.hpp"

namespace ewlink {

struct NoiseModel {
  double temperature_k = constants::kReferenceTemperature;
  double bandwidth_hz = 1.0;
  double noise_figure_db = 0.0;
  double mod_db = 0.0;  // channel white noise, as a sensitivity degradation

  void validate() const {
    detail::require_positive(temperature_k, "noise temperature");
    detail::require_positive(bandwidth_hz, "noise bandwidth");
    if (!(noise_figure_db >= 0.0) || !std::isfinite(noise_figure_db)) {
      throw DomainError("noise figure must be >= 0 dB");
    }
    if (!(mod_db >= 0.0) || !std::isfinite(mod_db)) {
      throw DomainError("channel MOD term must be >= 0 dB");
    }
  }

  friend bool operator==(const NoiseModel&, const NoiseModel&) = default;
};

struct NoiseStack {
  double johnson_dbw;   // k T0 B
  double receiver_dbw;  // + NF
  double total_dbw;     // + MOD, the minimum discernible signal
};

inline NoiseStack noise_stack(const NoiseModel& model,
                              double boltzmann = constants::kBoltzmann) {
  model.validate();
  NoiseStack n{};
  n.johnson_dbw = 10.0 * std::log10(boltzmann * model.temperature_k * model.bandwidth_hz);
  n.receiver_dbw = n.johnson_dbw + model.noise_figure_db;
  n.total_dbw = n.receiver_dbw + model.mod_db;
  return n;
}

}  // namespace ewlink

#endif  // EWLINK_NOISE_STACK_HPP
