#pragma once

#include "paramp/prototype.hpp"

namespace paramp {

/// Characteristic impedances of the three resonators and the environment.
struct ImpedancePlan {
    double z1 = 0.0;  // nonlinear resonator, omega0 * L_snake at the bias
    double z2 = 0.0;  // middle lumped resonator
    double z3 = 0.0;  // transmission-line resonator
    double z0 = 0.0;  // port environment
};

/// Geometry of the rf-SQUID array nonlinear inductor: two parallel chains of
/// n_total/2 SQUIDs each.
struct SnakeParams {
    int n_total = 0;     // 2N, total rf-SQUID count
    double ic_a = 0.0;   // junction critical current
    double l1s_h = 0.0;  // shared segment inductance
    double l2s_h = 0.0;  // center segment inductance
    double lb_h = 0.0;   // stray wiring inductance

    double lj_h() const;  // hbar / (2 e Ic)
};

SnakeParams paper_snake();

/// Series-B0 / shunt-B1 / negative-line realization of an admittance inverter
/// between a lumped and a transmission-line resonator.
struct InverterRealization {
    double j_s = 0.0;            // inverter value
    double b0_s = 0.0;           // series coupling susceptance, > 0
    double b1_s = 0.0;           // compensating shunt susceptance, < 0
    double theta_comp_deg = 0.0; // negative electrical length absorbed by the line
};

/// Every physical element of the amplifier circuit.
struct ComponentSet {
    double c1_f = 0.0;
    double c2_f = 0.0;
    double c12_f = 0.0;
    double c23_f = 0.0;
    double l2_h = 0.0;
    double l34_h = 0.0;
    double z3_ohm = 0.0;
    double theta_deg = 0.0;       // resonator-3 electrical length at omega0
    double theta_trim_deg = 0.0;  // manual adjustment, additive
    double l_snake_h = 0.0;

    double theta_effective_deg() const { return theta_deg + theta_trim_deg; }
};

struct ImmittanceInverters {
    double j12_s = 0.0;
    double j23_s = 0.0;
    double k34_ohm = 0.0;
};

ImmittanceInverters immittance_inverters(const ChebyshevPrototype& p, const BandSpec& band,
                                         const ImpedancePlan& plan);

/// Appendix-style three-element inverter between a lumped resonator and a line
/// of characteristic admittance yc. Requires 0 <= j < yc.
InverterRealization lumped_tl_inverter(double j_s, double yc_s);

/// Full component synthesis; l_snake comes from the plan (z1 / omega0) and
/// theta_trim is carried through unchanged.
ComponentSet realize_network(const ChebyshevPrototype& p, const BandSpec& band,
                             const ImpedancePlan& plan, double theta_trim_deg = 0.0);

/// Snake inductance at equilibrium junction phase delta0.
double snake_inductance(const SnakeParams& s, double delta0_rad);

/// Per-SQUID stage inductance (one array element), exposed for the pump model.
double snake_stage_inductance(const SnakeParams& s, double delta_rad);

/// Invert snake_inductance on the monotone branch delta0 in [0, pi/2].
double solve_bias(const SnakeParams& s, double l_target_h);

} // namespace paramp
