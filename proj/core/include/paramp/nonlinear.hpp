#pragma once

#include "paramp/abcd.hpp"

#include <vector>

namespace paramp {

/// Snake drive: dc phase bias plus pump phase amplitude at omega_p.
struct PumpOperatingPoint {
    double delta0_rad = 0.0;
    double delta_p_rad = 0.0;
    double omega_p = 0.0;
};

struct PumpLinearization {
    double l_eff_h = 0.0;  // dc effective inductance under pump
    double j_pa_s = 0.0;   // parametric admittance from the first harmonic
};

/// Fourier-decompose 1/L_total over one pump period. delta_split shifts the
/// two parallel arrays to delta0 -/+ delta_split (the saturation mechanism);
/// zero for the unperturbed operating point.
PumpLinearization pump_to_jpa(const SnakeParams& s, const PumpOperatingPoint& op,
                              double delta_split_rad = 0.0, int n_samples = 2048);

/// Small-signal operating point after pump calibration.
struct OperatingPoint {
    PumpOperatingPoint pump;
    PumpLinearization lin;
    double f_peak_hz = 0.0;    // argmax of the small-signal gain
    double f_center_hz = 0.0;  // band-metrics center
    double peak_gain_db = 0.0;
};

/// Hold the dc bias, raise delta_p until the small-signal peak gain reaches
/// target_gain_db; the band center is wherever the pumped response lands.
OperatingPoint calibrate_pump(const ComponentSet& c, const SnakeParams& s,
                              double delta0_rad, double omega_p, double target_gain_db,
                              double f_scan_lo_hz, double f_scan_hi_hz, double z0 = 50.0);

struct CompressionCurve {
    std::vector<double> pin_dbm;
    std::vector<double> gain_db;
    std::vector<double> phase_deg;
    std::vector<bool> converged;
};

struct CompressionSetup {
    ComponentSet components;  // l_snake is replaced by the pumped value per iteration
    SnakeParams snake;
    PumpOperatingPoint op;
    double f_meas_hz = 0.0;   // measurement frequency (band center)
    double z0 = 50.0;
};

/// Damped fixed-point saturation model: per power, iterate the per-array
/// phase split delta_s/n_total from the snake envelope current until the gain
/// settles to 0.001 dB (100 iterations max, damping 0.5).
CompressionCurve compression_sweep(const CompressionSetup& setup,
                                   const std::vector<double>& powers_dbm);

struct P1dB {
    double input_dbm = 0.0;
    double output_dbm = 0.0;
};

/// Linear interpolation of the (small-signal - 1 dB) crossing.
P1dB p1db(const CompressionCurve& curve);

/// Kerr coefficient from the cubic-compression convention
/// (3/4) K3 V1dB^2 = 1 - 10^(-1/20), V1dB the peak input amplitude.
double k3_from_p1db(double input_p1db_dbm, double z0);

struct NoiseModelParams {
    double t_hemt_k = 0.0;
    double f0_hz = 0.0;

    double t_quantum_k() const;  // one-photon-referred input noise, h f0 / kB
};

/// System-noise change in dB versus power: N(P) = G(P) Tq + Themt,
/// referenced to the first (lowest-power) point.
std::vector<double> system_noise_model(const CompressionCurve& curve,
                                       const NoiseModelParams& nm);

} // namespace paramp
