#pragma once

#include "paramp/constants.hpp"

#include <vector>

namespace paramp {

/// Normalized low-pass ladder coefficients g0..g_{N+1} of a matched-amplifier
/// prototype, plus the gain/ripple targets they were synthesized for.
struct ChebyshevPrototype {
    int order = 0;                 // N
    std::vector<double> g;         // size order + 2
    double design_gain_db = 0.0;
    double ripple_db = 0.0;
};

/// Center frequency and fractional bandwidth of the matching network.
struct BandSpec {
    double f0_hz = 0.0;
    double fractional_bandwidth = 0.0;  // w

    double omega0() const { return 2.0 * constants::pi * f0_hz; }
    double delta_omega() const { return fractional_bandwidth * omega0(); }
};

/// Couplings of the mode chain normalized by the port decay rate gamma0.
struct ReducedCouplings {
    double gamma0 = 0.0;          // rad/s, port dissipation rate
    double beta12 = 0.0;
    double beta23 = 0.0;
    double beta_p = 0.0;
    std::vector<double> chain;    // beta_{k,k+1}, k = 1..N-1 (beta12 first)
};

/// The three-pole 20 dB / 0.5 dB ripple ladder the reference design uses.
ChebyshevPrototype paper_prototype();

/// Validates invariants (positive coefficients, length = order + 2).
/// Throws std::invalid_argument naming the offending index or the length.
const ChebyshevPrototype& validate_prototype(const ChebyshevPrototype& p);

ReducedCouplings reduced_couplings(const ChebyshevPrototype& p, const BandSpec& band);

struct JpaValue {
    double prototype_form = 0.0;  // S
    double gain_form = 0.0;       // S
};

/// Parametric admittance inverter value from the ladder (prototype form) and
/// from the amplifier power gain (gain form, G > 1).
JpaValue jpa_value(const ChebyshevPrototype& p, double w, double z1);
double jpa_value_for_gain(double w, double z1, double g1, double power_gain);

} // namespace paramp
