#pragma once

#include "paramp/constants.hpp"

#include <vector>

namespace paramp {

/// Single-pole pumped-resonator susceptibility parameters.
struct SinglePoleParams {
    double omega0 = 0.0;   // rad/s
    double omega_p = 0.0;  // rad/s
    double kappa = 0.0;    // rad/s, total decay
    double f_p = 0.0;      // scaled pump strength
    double mu_p() const { return (omega_p - 2.0 * omega0) / (2.0 * kappa); }
};

/// Saturable TLS bath of the primary capacitor dielectric.
struct TlsBathParams {
    double t1_s = 0.0;
    double t2_s = 0.0;
    double qi = 0.0;          // low-power internal quality factor
    double dipole_cm = 0.0;   // C m
    double t_diel_m = 0.0;    // dielectric thickness

    double rho_v2(double omega0) const {
        return 3.0 / constants::pi * constants::hbar * omega0 * omega0 / qi;
    }
};

/// Drive bookkeeping from the amplifier design to the TLS drive strength.
struct ImdDriveMap {
    double gain = 0.0;  // linear power gain G
    double w = 0.0;     // fractional bandwidth
    double g1 = 0.0;
    double g4 = 0.0;
    double z1 = 0.0;
    double z0 = 0.0;
    double omega0 = 0.0;   // rad/s
    double k3_per_v2 = 0.0;

    double kappa() const { return w * omega0 / g1; }  // external damping rate
    double output_conversion() const;  // sqrt(w Z0 / (g1 g4 Z1))
};

struct ImdPoint {
    double pin_dbm = 0.0;
    double v_tls3 = 0.0;
    double v_kerr3 = 0.0;
    double v_out3 = 0.0;
    double v_tls5 = 0.0;
    double v_out5 = 0.0;
    bool valid = true;  // adiabatic regime flag
};

struct ImdCurve {
    std::vector<ImdPoint> points;
};

complex susceptibility(double omega, const SinglePoleParams& sp);

/// Third-order beat response function; nonnegative, increasing, ~ xi^2/40.
double psi3(double xi);
/// Fifth-order counterpart, ~ xi^3/224.
double psi5(double xi);

/// <Psi> = (1/T2) * integral over u of Psi(2 zeta / (1 + u^2)), in rad/s.
double averaged_psi(int order, double zeta_bar, double t2_s, double rel_tol = 1e-8);

struct RabiEnvelope {
    double v_d = 0.0;      // drive amplitude on the primary capacitor
    double omega_r = 0.0;  // beat-envelope Rabi amplitude
    double zeta_bar = 0.0; // T1 T2 OmegaR^2
};

RabiEnvelope rabi_envelope(double v_in, const ImdDriveMap& map, const TlsBathParams& bath);

/// TLS-induced intermodulation voltage magnitude at order 3 or 5.
double v_tls(int order, double v_in, const ImdDriveMap& map, const TlsBathParams& bath);

/// One point of the IM output curve; delta_f sets only the validity flag
/// (adiabatic when 2 pi delta_f T2 <= 0.3).
ImdPoint im_output(double v_in, double delta_f_hz, const ImdDriveMap& map,
                   const TlsBathParams& bath);

} // namespace paramp
