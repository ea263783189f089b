#include "paramp/tls_imd.hpp"

#include "paramp/numeric.hpp"

#include <cmath>
#include <stdexcept>

namespace paramp {

using constants::pi;

complex susceptibility(double omega, const SinglePoleParams& sp) {
    const complex j{0.0, 1.0};
    const double mu = sp.mu_p();
    const complex num = sp.kappa - j * (omega + sp.omega0 - sp.omega_p);
    const complex base = sp.kappa - j * (omega - sp.omega_p / 2.0);
    const complex den = base * base - sp.kappa * sp.kappa * (sp.f_p * sp.f_p - mu * mu);
    if (std::abs(den) < 1e-12 * sp.kappa * sp.kappa) {
        throw numeric_error("susceptibility: parametric-oscillation pole");
    }
    return j / sp.omega_p * num / den;
}

double psi3(double xi) {
    if (xi < 0) throw std::invalid_argument("psi3: xi must be non-negative");
    if (xi < 1e-3) {
        // removable limit; series keeps full relative accuracy through xi -> 0
        return xi * xi / 40.0 - xi * xi * xi / 56.0 + 5.0 * xi * xi * xi * xi / 384.0;
    }
    const double s = std::sqrt(xi);
    return 0.25 * std::sqrt(xi + 1.0) + 0.75 / s * std::log(s + std::sqrt(xi + 1.0)) - 1.0;
}

double psi5(double xi) {
    if (xi < 0) throw std::invalid_argument("psi5: xi must be non-negative");
    if (xi < 1e-3) {
        return xi * xi * xi / 224.0 - xi * xi * xi * xi / 192.0;
    }
    const double s = std::sqrt(xi);
    return (16.0 - 8.0 * xi + (xi - 16.0) * std::sqrt(1.0 + xi) +
            15.0 * s * std::log(s + std::sqrt(xi + 1.0))) /
           (4.0 * xi);
}

double averaged_psi(int order, double zeta_bar, double t2_s, double rel_tol) {
    if (order != 3 && order != 5) throw std::invalid_argument("averaged_psi: order must be 3 or 5");
    if (zeta_bar < 0) throw std::invalid_argument("averaged_psi: zeta_bar must be non-negative");
    if (zeta_bar == 0.0) return 0.0;
    auto f = (order == 3) ? psi3 : psi5;
    // u = tan(t) compactification of the detuning integral
    const double val = adaptive_simpson(
        [&](double t) {
            const double c = std::cos(t);
            if (c < 1e-154) return 0.0;
            const double u = std::tan(t);
            return f(2.0 * zeta_bar / (1.0 + u * u)) / (c * c);
        },
        -pi / 2.0, pi / 2.0, rel_tol);
    return val / t2_s;
}

double ImdDriveMap::output_conversion() const {
    return std::sqrt(w * z0 / (g1 * g4 * z1));
}

RabiEnvelope rabi_envelope(double v_in, const ImdDriveMap& map, const TlsBathParams& bath) {
    if (v_in < 0) throw std::invalid_argument("rabi_envelope: V_in must be non-negative");
    RabiEnvelope r;
    r.v_d = v_in * std::sqrt(map.z1 * map.g1 / (map.w * map.z0));
    const double v_env = std::sqrt(2.0 * map.gain) * r.v_d;  // intracavity beat envelope
    r.omega_r = bath.dipole_cm / constants::hbar * (v_env / bath.t_diel_m);
    r.zeta_bar = bath.t1_s * bath.t2_s * r.omega_r * r.omega_r;
    return r;
}

double v_tls(int order, double v_in, const ImdDriveMap& map, const TlsBathParams& bath) {
    const auto r = rabi_envelope(v_in, map, bath);
    if (r.omega_r == 0.0) return 0.0;
    const double avg = averaged_psi(order, r.zeta_bar, bath.t2_s);
    return 3.0 * map.gain / (4.0 * pi * bath.qi) * map.omega0 * r.v_d /
           (map.kappa() * bath.t1_s * r.omega_r * r.omega_r) * avg;
}

ImdPoint im_output(double v_in, double delta_f_hz, const ImdDriveMap& map,
                   const TlsBathParams& bath) {
    ImdPoint p;
    p.pin_dbm = v_in > 0 ? watts_to_dbm(v_in * v_in / (2.0 * map.z0)) : -1e30;
    const double conv = map.output_conversion();
    p.v_tls3 = v_tls(3, v_in, map, bath) * conv;
    p.v_kerr3 = 0.75 * map.gain * map.k3_per_v2 * v_in * v_in * v_in;
    // TLS and Kerr contributions carry opposite signs
    p.v_out3 = std::abs(p.v_tls3 - p.v_kerr3);
    p.v_tls5 = v_tls(5, v_in, map, bath) * conv;
    p.v_out5 = p.v_tls5;
    p.valid = (2.0 * pi * delta_f_hz * bath.t2_s) <= 0.3;
    return p;
}

} // namespace paramp
