#pragma once
#ifndef EWLINK_DB_UNITS_HPP
#define EWLINK_DB_UNITS_HPP

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>

#include "ewlink/errors.hpp"

namespace ewlink {

//=#=#==#==#===============+=+=+=+=++=++++++++++++++-++-+--+-+----+---------------
// Constants

namespace constants {

inline constexpr double kBoltzmann = 1.380649e-23;      // J/K, exact SI
inline constexpr double kSpeedOfLight = 299792458.0;    // m/s, exact SI
inline constexpr double kReferenceTemperature = 290.0;  // K
inline constexpr double kPi = std::numbers::pi;

}  // namespace constants

// Carried as a value so the reference temperature can be overridden per
// receiver without touching the SI constants.
struct PhysicalConstants {
  double boltzmann = constants::kBoltzmann;
  double speed_of_light = constants::kSpeedOfLight;
  double reference_temperature_k = constants::kReferenceTemperature;

  friend bool operator==(const PhysicalConstants&, const PhysicalConstants&) = default;
};

//=#=#==#==#===============+=+=+=+=++=++++++++++++++-++-+--+-+----+---------------
// Ratios

inline double ratio_to_db(double ratio) {
  detail::require_positive(ratio, "linear ratio");
  return 10.0 * std::log10(ratio);
}

inline double db_to_ratio(double db) {
  detail::require_finite(db, "dB value");
  return std::pow(10.0, db / 10.0);
}

// Dimensionless gain or loss in dB.
struct DbRatio {
  double db = 0.0;

  static DbRatio from_linear(double ratio) { return DbRatio{ratio_to_db(ratio)}; }
  double linear() const { return db_to_ratio(db); }

  friend bool operator==(const DbRatio&, const DbRatio&) = default;
};

//=#=#==#==#===============+=+=+=+=++=++++++++++++++-++-+--+-+----+---------------
// Powers

enum class PowerRef { kWatts, kDbw, kDbm };

inline constexpr double kDbmOffset = 30.0;

inline double watts_to_dbw(double watts) {
  detail::require_positive(watts, "power in watts");
  return 10.0 * std::log10(watts);
}

inline double dbw_to_watts(double dbw) {
  detail::require_finite(dbw, "power in dBW");
  return std::pow(10.0, dbw / 10.0);
}

inline double dbw_to_dbm(double dbw) { return dbw + kDbmOffset; }
inline double dbm_to_dbw(double dbm) { return dbm - kDbmOffset; }

/// A power tagged with the reference it is expressed in. Conversions between
/// dBW and dBm are exact offsets; only the watts leg goes through log10/pow.
class PowerLevel {
 public:
  PowerLevel(double value, PowerRef reference) : value_{value}, reference_{reference} {
    if (reference == PowerRef::kWatts) {
      detail::require_positive(value, "power in watts");
    } else {
      detail::require_finite(value, "power level");
    }
  }

  static PowerLevel watts(double w) { return PowerLevel{w, PowerRef::kWatts}; }
  static PowerLevel dbw(double v) { return PowerLevel{v, PowerRef::kDbw}; }
  static PowerLevel dbm(double v) { return PowerLevel{v, PowerRef::kDbm}; }

  double value() const { return value_; }
  PowerRef reference() const { return reference_; }

  double in_dbw() const {
    switch (reference_) {
      case PowerRef::kWatts:
        return watts_to_dbw(value_);
      case PowerRef::kDbm:
        return dbm_to_dbw(value_);
      case PowerRef::kDbw:
        break;
    }
    return value_;
  }

  double in_dbm() const {
    if (reference_ == PowerRef::kDbm) {
      return value_;
    }
    return dbw_to_dbm(in_dbw());
  }

  double in_watts() const {
    if (reference_ == PowerRef::kWatts) {
      return value_;
    }
    return dbw_to_watts(in_dbw());
  }

  PowerLevel to(PowerRef target) const {
    switch (target) {
      case PowerRef::kWatts:
        return watts(in_watts());
      case PowerRef::kDbw:
        return dbw(in_dbw());
      case PowerRef::kDbm:
        break;
    }
    return dbm(in_dbm());
  }

  friend bool operator==(const PowerLevel&, const PowerLevel&) = default;

 private:
  double value_;
  PowerRef reference_;
};

inline PowerLevel convert(const PowerLevel& p, PowerRef target) { return p.to(target); }

// Incoherent sum of two powers given in dBW. An absent addend is the
// identity element.
inline double power_sum_db(double a_dbw, std::optional<double> b_dbw) {
  if (!b_dbw) {
    return a_dbw;
  }
  const double hi = std::max(a_dbw, *b_dbw);
  const double lo = std::min(a_dbw, *b_dbw);
  // Factor out the larger term so widely separated inputs do not lose the
  // small one to overflow or underflow in pow().
  return hi + 10.0 * std::log10(1.0 + std::pow(10.0, (lo - hi) / 10.0));
}

//=#=#==#==#===============+=+=+=+=++=++++++++++++++-++-+--+-+----+---------------
// Frequency / wavelength

inline double wavelength_from_frequency(double frequency_hz,
                                        double speed_of_light = constants::kSpeedOfLight) {
  detail::require_positive(frequency_hz, "frequency");
  return speed_of_light / frequency_hz;
}

inline double frequency_from_wavelength(double wavelength_m,
                                        double speed_of_light = constants::kSpeedOfLight) {
  detail::require_positive(wavelength_m, "wavelength");
  return speed_of_light / wavelength_m;
}

}  // namespace ewlink

#endif  // EWLINK_DB_UNITS_HPP
