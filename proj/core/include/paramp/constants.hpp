#pragma once

#include <cmath>
#include <complex>

namespace paramp {

using complex = std::complex<double>;

// CODATA 2018 exact/defined values
namespace constants {
inline constexpr double hbar = 1.054571817e-34;   // J s
inline constexpr double h_planck = 6.62607015e-34; // J s
inline constexpr double e_charge = 1.602176634e-19; // C
inline constexpr double k_boltzmann = 1.380649e-23; // J/K
inline constexpr double phi0 = 2.067833848e-15;    // Wb, h/2e
inline constexpr double debye = 3.33564e-30;       // C m
inline constexpr double pi = 3.14159265358979323846;
} // namespace constants

inline double deg_to_rad(double deg) { return deg * constants::pi / 180.0; }
inline double rad_to_deg(double rad) { return rad * 180.0 / constants::pi; }

/// Power gain |a|^2 of a complex amplitude, in dB.
inline double amp_to_db(const complex& a) { return 20.0 * std::log10(std::abs(a)); }
inline double power_to_db(double p) { return 10.0 * std::log10(p); }

inline double dbm_to_watts(double dbm) { return std::pow(10.0, dbm / 10.0) * 1e-3; }
inline double watts_to_dbm(double w) { return 10.0 * std::log10(w / 1e-3); }

/// Peak voltage amplitude of a wave carrying power p on impedance z0.
inline double watts_to_peak_volts(double p, double z0) { return std::sqrt(2.0 * z0 * p); }

} // namespace paramp
