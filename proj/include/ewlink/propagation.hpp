#pragma once
#ifndef EWLINK_PROPAGATION_HPP
#define EWLINK_PROPAGATION_HPP

#include <cmath>
#include <string>
#include <variant>

#include "ewlink/db_units.hpp"

namespace ewlink {

//=#=#==#==#===============+=+=+=+=++=++++++++++++++-++-+--+-+----+---------------
// Antennas

inline double degrees_to_radians(double deg) { return deg * constants::kPi / 180.0; }

/// Gain of an antenna whose main beam fills an az x el rectangle of solid
/// angle, G = eta * 4pi / (theta_az * theta_el) with the angles in radians.
inline DbRatio gain_from_beamwidths(double az_beamwidth_deg, double el_beamwidth_deg,
                                    double efficiency) {
  if (!(az_beamwidth_deg > 0.0 && az_beamwidth_deg <= 360.0)) {
    throw DomainError("azimuth beamwidth must lie in (0, 360] degrees");
  }
  if (!(el_beamwidth_deg > 0.0 && el_beamwidth_deg <= 360.0)) {
    throw DomainError("elevation beamwidth must lie in (0, 360] degrees");
  }
  if (!(efficiency > 0.0 && efficiency <= 1.0)) {
    throw DomainError("antenna efficiency must lie in (0, 1]");
  }
  const double beam_solid_angle =
      degrees_to_radians(az_beamwidth_deg) * degrees_to_radians(el_beamwidth_deg);
  return DbRatio{10.0 * std::log10(efficiency * 4.0 * constants::kPi / beam_solid_angle)};
}

struct Beamwidths {
  double az_deg = 0.0;
  double el_deg = 0.0;
  double efficiency = 1.0;

  friend bool operator==(const Beamwidths&, const Beamwidths&) = default;
};

// Either a directly stated gain or the beam geometry it is derived from.
struct AntennaSpec {
  std::variant<DbRatio, Beamwidths> source = DbRatio{0.0};

  static AntennaSpec isotropic() { return AntennaSpec{DbRatio{0.0}}; }
  static AntennaSpec from_gain_db(double gain_db) { return AntennaSpec{DbRatio{gain_db}}; }
  static AntennaSpec from_beamwidths(double az_deg, double el_deg, double efficiency = 1.0) {
    return AntennaSpec{Beamwidths{az_deg, el_deg, efficiency}};
  }

  bool is_beamwidth_defined() const { return std::holds_alternative<Beamwidths>(source); }

  double gain_db() const {
    if (const auto* bw = std::get_if<Beamwidths>(&source)) {
      return gain_from_beamwidths(bw->az_deg, bw->el_deg, bw->efficiency).db;
    }
    return std::get<DbRatio>(source).db;
  }

  friend bool operator==(const AntennaSpec&, const AntennaSpec&) = default;
};

//=#=#==#==#===============+=+=+=+=++=++++++++++++++-++-+--+-+----+---------------
// Geometry and targets

struct PathGeometry {
  double range_m;
  double wavelength_m;

  static PathGeometry from_frequency(double range_m, double frequency_hz) {
    return PathGeometry{range_m, wavelength_from_frequency(frequency_hz)};
  }

  void validate() const {
    detail::require_positive(range_m, "range");
    detail::require_positive(wavelength_m, "wavelength");
  }
};

struct TargetSpec {
  std::string name;
  double rcs_m2 = 1.0;

  friend bool operator==(const TargetSpec&, const TargetSpec&) = default;
};

//=#=#==#==#===============+=+=+=+=++=++++++++++++++-++-+--+-+----+---------------
// Building blocks

inline double eirp_dbw(double p_tx_dbw, DbRatio g_tx) { return p_tx_dbw + g_tx.db; }

// Power density at range R, in dB(W/m^2).
inline double power_density_dbw_m2(double eirp_dbw, double range_m) {
  detail::require_positive(range_m, "range");
  return eirp_dbw - 10.0 * std::log10(4.0 * constants::kPi * range_m * range_m);
}

inline double effective_area_m2(double wavelength_m, DbRatio g_rx) {
  detail::require_positive(wavelength_m, "wavelength");
  return wavelength_m * wavelength_m * g_rx.linear() / (4.0 * constants::kPi);
}

// Solid angle (sr) an aperture subtends when seen from range R.
inline double reception_solid_angle_sr(double wavelength_m, DbRatio g_rx, double range_m) {
  detail::require_positive(range_m, "range");
  return effective_area_m2(wavelength_m, g_rx) / (range_m * range_m);
}

enum class FslVariant {
  kExact,           // 20 log10(4 pi R / lambda)
  kWavelengthForm,  // 21.98 + 20 log R[m] - 20 log lambda[m]
  kKmGhzForm,       // 92.45 + 20 log R[km] + 20 log f[GHz]
  kKmMhzForm,       // 32.45 + 20 log R[km] + 20 log f[MHz]
};

/// One-way free-space loss as a positive dB number. Always subtracted from a
/// budget, never added.
///
/// The three handbook forms use the rounded constants 21.98, 92.45 and 32.45
/// dB and therefore differ from the exact form by up to ~0.01 dB.
inline double free_space_loss_db(const PathGeometry& geometry,
                                 FslVariant variant = FslVariant::kExact) {
  geometry.validate();
  const double r = geometry.range_m;
  const double lambda = geometry.wavelength_m;
  switch (variant) {
    case FslVariant::kWavelengthForm:
      return 21.98 + 20.0 * std::log10(r) - 20.0 * std::log10(lambda);
    case FslVariant::kKmGhzForm:
      return 92.45 + 20.0 * std::log10(r / 1e3) +
             20.0 * std::log10(frequency_from_wavelength(lambda) / 1e9);
    case FslVariant::kKmMhzForm:
      return 32.45 + 20.0 * std::log10(r / 1e3) +
             20.0 * std::log10(frequency_from_wavelength(lambda) / 1e6);
    case FslVariant::kExact:
      break;
  }
  return 20.0 * std::log10(4.0 * constants::kPi * r / lambda);
}

/// RCS recast as a dimensionless antenna gain, G = 4 pi sigma / lambda^2.
/// Can be negative in dB for small targets at long wavelengths.
inline DbRatio target_gain(double rcs_m2, double wavelength_m) {
  detail::require_positive(rcs_m2, "radar cross section");
  detail::require_positive(wavelength_m, "wavelength");
  return DbRatio{10.0 * std::log10(4.0 * constants::kPi * rcs_m2 / (wavelength_m * wavelength_m))};
}

}  // namespace ewlink

#endif  // EWLINK_PROPAGATION_HPP
