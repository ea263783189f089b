#include "paramp/nonlinear.hpp"

#include "paramp/numeric.hpp"

#include <cmath>
#include <stdexcept>

namespace paramp {

using constants::pi;

PumpLinearization pump_to_jpa(const SnakeParams& s, const PumpOperatingPoint& op,
                              double delta_split_rad, int n_samples) {
    if (op.delta_p_rad < 0) throw std::invalid_argument("pump: delta_p must be non-negative");
    if (!(op.omega_p > 0)) throw std::invalid_argument("pump: omega_p must be positive");
    const double n_per_array = s.n_total / 2.0;

    double g0 = 0.0, g1c = 0.0, g1s = 0.0;
    for (int k = 0; k < n_samples; ++k) {
        const double phase = 2.0 * pi * k / n_samples;
        const double drive = op.delta_p_rad * std::cos(phase);
        const double la = n_per_array * snake_stage_inductance(s, op.delta0_rad - delta_split_rad + drive);
        const double lb = n_per_array * snake_stage_inductance(s, op.delta0_rad + delta_split_rad + drive);
        if (!(la > 0.0) || !(lb > 0.0)) {
            throw std::runtime_error("pump: phase excursion crosses the inductance singularity");
        }
        const double l_total = s.lb_h + la * lb / (la + lb);
        const double inv_l = 1.0 / l_total;
        g0 += inv_l;
        g1c += inv_l * std::cos(phase);
        g1s += inv_l * std::sin(phase);
    }
    g0 /= n_samples;
    g1c *= 2.0 / n_samples;
    g1s *= 2.0 / n_samples;

    PumpLinearization lin;
    lin.l_eff_h = 1.0 / g0;
    const double omega0 = op.omega_p / 2.0;
    // half the inverse-inductance modulation depth acts as the parametric admittance
    lin.j_pa_s = std::hypot(g1c, g1s) / (2.0 * omega0);
    return lin;
}

namespace {

struct SmallSignal {
    double peak_gain_db;
    double f_peak_hz;
};

SmallSignal scan_peak(const ComponentSet& base, const PumpLinearization& lin, double omega_p,
                      double f_lo, double f_hi, double z0, int n_points = 321) {
    ComponentSet c = base;
    c.l_snake_h = lin.l_eff_h;
    const Netlist n = amplifier_netlist(c, lin.j_pa_s, omega_p, z0);
    SmallSignal out{-1e30, f_lo};
    const double step = (f_hi - f_lo) / (n_points - 1);
    for (int i = 0; i < n_points; ++i) {
        const double f = f_lo + i * step;
        const double g = amp_to_db(reflection(n, 2.0 * pi * f));
        if (g > out.peak_gain_db) {
            out.peak_gain_db = g;
            out.f_peak_hz = f;
        }
    }
    return out;
}

} // namespace

OperatingPoint calibrate_pump(const ComponentSet& c, const SnakeParams& s,
                              double delta0_rad, double omega_p, double target_gain_db,
                              double f_scan_lo_hz, double f_scan_hi_hz, double z0) {
    PumpOperatingPoint op{delta0_rad, 0.0, omega_p};
    auto peak_at = [&](double dp) {
        op.delta_p_rad = dp;
        return scan_peak(c, pump_to_jpa(s, op), omega_p, f_scan_lo_hz, f_scan_hi_hz, z0)
            .peak_gain_db;
    };
    double lo = 0.0, hi = 0.4;
    while (peak_at(hi) < target_gain_db) {
        lo = hi;
        hi += 0.2;
        if (hi > 3.0) throw numeric_error("calibrate_pump: target gain unreachable");
    }
    op.delta_p_rad = bisect([&](double dp) { return peak_at(dp) - target_gain_db; },
                            lo, hi, 1e-6);

    OperatingPoint result;
    result.pump = op;
    result.lin = pump_to_jpa(s, op);
    ComponentSet cc = c;
    cc.l_snake_h = result.lin.l_eff_h;
    const Netlist n = amplifier_netlist(cc, result.lin.j_pa_s, omega_p, z0);
    const auto trace = gain_sweep(n, f_scan_lo_hz, f_scan_hi_hz, 801);
    const auto bm = band_metrics(trace, target_gain_db);
    const auto pk = scan_peak(c, result.lin, omega_p, f_scan_lo_hz, f_scan_hi_hz, z0, 801);
    result.f_peak_hz = pk.f_peak_hz;
    result.peak_gain_db = pk.peak_gain_db;
    result.f_center_hz = bm.center_hz;
    return result;
}

CompressionCurve compression_sweep(const CompressionSetup& setup,
                                   const std::vector<double>& powers_dbm) {
    for (std::size_t i = 1; i < powers_dbm.size(); ++i) {
        if (!(powers_dbm[i] > powers_dbm[i - 1])) {
            throw std::invalid_argument("compression_sweep: power grid must be increasing");
        }
    }
    const double omega = 2.0 * pi * setup.f_meas_hz;
    const double n_total = setup.snake.n_total;
    constexpr std::size_t snake_signal_index = 6;
    constexpr std::size_t snake_idler_index = 8;
    constexpr double damping = 0.5;
    constexpr double gain_tol_db = 1e-3;
    constexpr int max_iter = 100;

    CompressionCurve curve;
    for (const double p_dbm : powers_dbm) {
        const double vg = std::sqrt(8.0 * setup.z0 * dbm_to_watts(p_dbm));
        double delta_s = 0.0;
        double last_gain = 0.0;
        double gain_db = 0.0, phase_deg = 0.0;
        bool converged = false;
        for (int it = 0; it < max_iter; ++it) {
            const auto lin = pump_to_jpa(setup.snake, setup.op, delta_s / n_total);
            ComponentSet c = setup.components;
            c.l_snake_h = lin.l_eff_h;
            const Netlist n = amplifier_netlist(c, lin.j_pa_s, setup.op.omega_p, setup.z0);
            const complex s11 = reflection(n, omega);
            gain_db = amp_to_db(s11);
            phase_deg = rad_to_deg(std::arg(s11));
            const auto sig = element_drive(n, snake_signal_index, omega, vg);
            const auto idl = element_drive(n, snake_idler_index, omega, vg);
            // rms beat-envelope amplitude of the snake current (signal + idler)
            const double i_env = std::hypot(std::abs(sig.i_element), std::abs(idl.i_element));
            const double ds_new = 2.0 * pi / constants::phi0 * lin.l_eff_h * i_env;
            delta_s = damping * delta_s + (1.0 - damping) * ds_new;
            if (it > 0 && std::abs(gain_db - last_gain) < gain_tol_db) {
                converged = true;
                break;
            }
            last_gain = gain_db;
        }
        curve.pin_dbm.push_back(p_dbm);
        curve.gain_db.push_back(gain_db);
        curve.phase_deg.push_back(phase_deg);
        curve.converged.push_back(converged);
    }
    return curve;
}

P1dB p1db(const CompressionCurve& curve) {
    if (curve.pin_dbm.size() < 2) throw std::invalid_argument("p1db: need at least 2 points");
    const double gss = curve.gain_db.front();
    const double target = gss - 1.0;
    for (std::size_t i = 1; i < curve.pin_dbm.size(); ++i) {
        if (curve.gain_db[i] < target) {
            const double x0 = curve.pin_dbm[i - 1], x1 = curve.pin_dbm[i];
            const double y0 = curve.gain_db[i - 1], y1 = curve.gain_db[i];
            P1dB out;
            out.input_dbm = x0 + (target - y0) * (x1 - x0) / (y1 - y0);
            out.output_dbm = out.input_dbm + target;
            return out;
        }
    }
    throw std::runtime_error("p1db: curve never compresses by 1 dB in range");
}

double k3_from_p1db(double input_p1db_dbm, double z0) {
    const double v1db = watts_to_peak_volts(dbm_to_watts(input_p1db_dbm), z0);
    const double drop = 1.0 - std::pow(10.0, -1.0 / 20.0);
    return drop * 4.0 / 3.0 / (v1db * v1db);
}

double NoiseModelParams::t_quantum_k() const {
    return constants::h_planck * f0_hz / constants::k_boltzmann;
}

std::vector<double> system_noise_model(const CompressionCurve& curve,
                                       const NoiseModelParams& nm) {
    if (curve.gain_db.empty()) throw std::invalid_argument("noise model: empty curve");
    if (!(nm.t_hemt_k > 0)) throw std::invalid_argument("noise model: T_hemt must be positive");
    const double tq = nm.t_quantum_k();
    auto noise = [&](double gain_db) {
        return std::pow(10.0, gain_db / 10.0) * tq + nm.t_hemt_k;
    };
    const double n0 = noise(curve.gain_db.front());
    std::vector<double> out;
    out.reserve(curve.gain_db.size());
    for (const double g : curve.gain_db) out.push_back(10.0 * std::log10(noise(g) / n0));
    return out;
}

} // namespace paramp
