#pragma once

#include <stdexcept>

namespace kin {

// 2018 CODATA exact values. The speed of light is kept in cm/s so that
// spectroscopic wavenumbers (cm^-1) convert to energies as E = h*c*nu.
namespace codata {
inline constexpr double k_boltzmann = 1.380649e-23;    // J/K
inline constexpr double planck_h = 6.62607015e-34;     // J s
inline constexpr double light_speed_cm = 2.99792458e10; // cm/s
inline constexpr double hc = planck_h * light_speed_cm; // J cm
}

inline double wavenumber_to_joule(double nu_cm) { return codata::hc * nu_cm; }

struct PhysicalConstants {
  double k_B = codata::k_boltzmann;
  double h = codata::planck_h;
  double c = codata::light_speed_cm;
  double molecular_mass = 0.0; // kg

  void validate() const {
    if (!(k_B > 0.0) || !(h > 0.0) || !(c > 0.0) || !(molecular_mass > 0.0))
      throw std::invalid_argument("PhysicalConstants: all entries must be positive");
  }
};

} // namespace kin
