#include "paramp/synthesis.hpp"

#include "paramp/numeric.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace paramp {

using constants::pi;

double SnakeParams::lj_h() const {
    return constants::hbar / (2.0 * constants::e_charge * ic_a);
}

SnakeParams paper_snake() {
    return SnakeParams{40, 16e-6, 2.6e-12, 8.0e-12, 50e-12};
}

namespace {

void check_plan(const ImpedancePlan& plan) {
    if (!(plan.z1 > 0 && plan.z2 > 0 && plan.z3 > 0 && plan.z0 > 0)) {
        throw std::invalid_argument("impedance plan: all impedances must be positive");
    }
}

void check_snake(const SnakeParams& s) {
    if (s.n_total <= 0 || s.n_total % 2 != 0) {
        throw std::invalid_argument("snake: n_total must be even and positive");
    }
    if (!(s.ic_a > 0)) throw std::invalid_argument("snake: Ic must be positive");
    if (s.l1s_h < 0 || s.l2s_h < 0 || s.lb_h < 0) {
        throw std::invalid_argument("snake: inductances must be non-negative");
    }
}

} // namespace

ImmittanceInverters immittance_inverters(const ChebyshevPrototype& p, const BandSpec& band,
                                         const ImpedancePlan& plan) {
    validate_prototype(p);
    check_plan(plan);
    if (p.order != 3) throw std::invalid_argument("immittance_inverters: three-pole networks only");
    const double w = band.fractional_bandwidth;
    ImmittanceInverters inv;
    inv.j12_s = w * std::sqrt(1.0 / (p.g[1] * p.g[2] * plan.z1 * plan.z2));
    // pi/4 factors: resonator 3 is a quarter-wave line, not a lumped resonator
    inv.j23_s = w * std::sqrt(pi / (4.0 * p.g[2] * p.g[3] * plan.z2 * plan.z3));
    inv.k34_ohm = std::sqrt(pi / 4.0 * w * plan.z3 * plan.z0 / (p.g[3] * p.g[4]));
    return inv;
}

InverterRealization lumped_tl_inverter(double j_s, double yc_s) {
    if (!(yc_s > 0)) throw std::invalid_argument("inverter: Yc must be positive");
    if (j_s < 0 || j_s >= yc_s) {
        throw std::invalid_argument("inverter: requires 0 <= J < Yc (unrealizable otherwise)");
    }
    InverterRealization r;
    r.j_s = j_s;
    const double root = std::sqrt(1.0 - (j_s / yc_s) * (j_s / yc_s));
    r.b0_s = (j_s == 0.0) ? 0.0 : j_s / root;
    r.b1_s = -j_s * root;
    r.theta_comp_deg = -rad_to_deg(std::atan(r.b0_s / yc_s));
    return r;
}

ComponentSet realize_network(const ChebyshevPrototype& p, const BandSpec& band,
                             const ImpedancePlan& plan, double theta_trim_deg) {
    const auto inv = immittance_inverters(p, band, plan);
    const double w0 = band.omega0();

    ComponentSet c;
    c.z3_ohm = plan.z3;
    c.theta_trim_deg = theta_trim_deg;
    c.l_snake_h = plan.z1 / w0;

    c.c12_f = inv.j12_s / w0;

    const double k_ratio = inv.k34_ohm / plan.z3;
    const double x34 = inv.k34_ohm / (1.0 - k_ratio * k_ratio);
    c.l34_h = x34 / w0;

    const double jz = inv.j23_s * plan.z3;
    const double root = std::sqrt(1.0 - jz * jz);
    const double b23 = inv.j23_s / root;
    c.c23_f = b23 / w0;

    c.c1_f = 1.0 / (plan.z1 * w0) - c.c12_f;
    c.l2_h = plan.z2 / w0;
    const double b23e = inv.j23_s * root;
    c.c2_f = 1.0 / (plan.z2 * w0) - c.c12_f - b23e / w0;

    c.theta_deg = 90.0 - rad_to_deg(std::atan(b23 * plan.z3)) -
                  0.5 * rad_to_deg(std::atan(2.0 * x34 / plan.z3));

    auto reject = [](double v, const char* name) {
        if (!(v > 0.0)) {
            throw std::runtime_error(std::string("synthesis: non-positive component ") + name);
        }
    };
    reject(c.c1_f, "C1");
    reject(c.c2_f, "C2");
    reject(c.c12_f, "C12");
    reject(c.c23_f, "C23");
    reject(c.l2_h, "L2");
    reject(c.l34_h, "L34");
    reject(c.l_snake_h, "L_snake");
    const double theta_eff = c.theta_effective_deg();
    if (!(theta_eff > 0.0 && theta_eff < 90.0)) {
        throw std::runtime_error("synthesis: effective theta outside (0, 90) degrees");
    }
    return c;
}

double snake_stage_inductance(const SnakeParams& s, double delta_rad) {
    const double lj = s.lj_h();
    const double c = std::cos(delta_rad);
    const double den = lj + (4.0 * s.l1s_h + s.l2s_h) * c;
    if (std::abs(den) < 1e-18) {
        throw std::runtime_error("snake: inductance singularity at this phase");
    }
    return (lj * (s.l1s_h + s.l2s_h) + s.l1s_h * s.l2s_h * c) / den;
}

double snake_inductance(const SnakeParams& s, double delta0_rad) {
    check_snake(s);
    const double n_per_array = s.n_total / 2.0;
    // two parallel arrays of n_per_array stages each
    return s.lb_h + n_per_array / 2.0 * snake_stage_inductance(s, delta0_rad);
}

double solve_bias(const SnakeParams& s, double l_target_h) {
    check_snake(s);
    const double lo_val = snake_inductance(s, 0.0);
    const double hi_val = snake_inductance(s, pi / 2.0);
    const double lo_bound = std::min(lo_val, hi_val);
    const double hi_bound = std::max(lo_val, hi_val);
    if (l_target_h < lo_bound || l_target_h > hi_bound) {
        throw std::runtime_error("solve_bias: target inductance outside the [0, pi/2] branch");
    }
    return bisect([&](double d) { return snake_inductance(s, d) - l_target_h; },
                  0.0, pi / 2.0, 1e-12);
}

} // namespace paramp
