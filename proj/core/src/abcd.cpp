#include "paramp/abcd.hpp"

#include "paramp/numeric.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace paramp {

namespace {

TwoPort shunt_admittance(complex y) { return {1.0, 0.0, y, 1.0}; }
TwoPort series_impedance(complex z) { return {1.0, z, 0.0, 1.0}; }

const complex j_unit{0.0, 1.0};

} // namespace

bool Netlist::has_inverter() const {
    for (const auto& e : elements) {
        if (std::holds_alternative<ParametricInverter>(e.kind)) return true;
    }
    return false;
}

TwoPort element_abcd(const Element& e, double omega) {
    if (!(omega > 0.0)) throw std::invalid_argument("element_abcd: omega must be positive");
    // idler elements see the (negative) idler frequency omega - omega_p
    const double w = e.idler ? omega - e.omega_p : omega;

    return std::visit(
        [&](const auto& el) -> TwoPort {
            using T = std::decay_t<decltype(el)>;
            if constexpr (std::is_same_v<T, Capacitor>) {
                const complex y = j_unit * w * el.c_f;
                if (el.placement == Placement::shunt) return shunt_admittance(y);
                return series_impedance(1.0 / y);
            } else if constexpr (std::is_same_v<T, Inductor>) {
                const complex z = j_unit * w * el.l_h;
                if (el.placement == Placement::shunt) return shunt_admittance(1.0 / z);
                return series_impedance(z);
            } else if constexpr (std::is_same_v<T, ParallelLC>) {
                const complex y = j_unit * w * el.c_f + 1.0 / (j_unit * w * el.l_h);
                return shunt_admittance(y);
            } else if constexpr (std::is_same_v<T, TLine>) {
                const double tau = deg_to_rad(el.theta_deg) / el.omega0;
                const double arg = w * tau;
                const double cs = std::cos(arg), sn = std::sin(arg);
                return {complex{cs}, j_unit * el.z_ohm * sn, j_unit * sn / el.z_ohm, complex{cs}};
            } else {
                static_assert(std::is_same_v<T, ParametricInverter>);
                if (el.j_pa_s == 0.0) {
                    throw std::invalid_argument(
                        "parametric inverter: J_PA = 0 undefined; remove the inverter for pump off");
                }
                return {0.0, j_unit / el.j_pa_s, -j_unit * el.j_pa_s, 0.0};
            }
        },
        e.kind);
}

TwoPort cascade(const std::vector<Element>& elements, double omega) {
    if (elements.empty()) throw std::invalid_argument("cascade: empty element list");
    TwoPort t;
    for (const auto& e : elements) t = t * element_abcd(e, omega);
    return t;
}

SParams to_s(const TwoPort& t, double zs, double zl) {
    if (!(zs > 0 && zl > 0)) throw std::invalid_argument("to_s: reference impedances must be positive");
    const complex den = t.a * zl + t.b + t.c * zs * zl + t.d * zs;
    if (std::abs(den) < 1e-300) throw numeric_error("to_s: degenerate conversion denominator");
    const double zroot = std::sqrt(zs * zl);
    SParams s;
    s.s11 = (t.a * zl + t.b - t.c * zs * zl - t.d * zs) / den;
    s.s21 = 2.0 * zroot / den;
    s.s12 = 2.0 * t.det() * zroot / den;
    s.s22 = (-t.a * zl + t.b - t.c * zs * zl + t.d * zs) / den;
    return s;
}

namespace {

std::vector<Element> signal_chain(const ComponentSet& c, double omega0) {
    return {
        {Inductor{c.l34_h, Placement::shunt}, false, 0.0},
        {TLine{c.z3_ohm, c.theta_effective_deg(), omega0}, false, 0.0},
        {Capacitor{c.c23_f, Placement::series}, false, 0.0},
        {ParallelLC{c.l2_h, c.c2_f}, false, 0.0},
        {Capacitor{c.c12_f, Placement::series}, false, 0.0},
        {Capacitor{c.c1_f, Placement::shunt}, false, 0.0},
        {Inductor{c.l_snake_h, Placement::shunt}, false, 0.0},
    };
}

} // namespace

Netlist amplifier_netlist(const ComponentSet& c, double j_pa_s, double omega_p, double z0) {
    Netlist n;
    n.z_source = z0;
    n.z_load = z0;
    // the pump sits at twice the design center, so theta's reference is omega_p/2
    const auto sig = signal_chain(c, omega_p / 2.0);
    n.elements = sig;
    n.elements.push_back({ParametricInverter{j_pa_s}, false, 0.0});
    for (auto it = sig.rbegin(); it != sig.rend(); ++it) {
        Element e = *it;
        e.idler = true;
        e.omega_p = omega_p;
        n.elements.push_back(e);
    }
    return n;
}

Netlist passive_netlist(const ComponentSet& c, double omega0, double z0) {
    Netlist n;
    n.z_source = z0;
    n.z_load = z0;
    n.elements = signal_chain(c, omega0);
    return n;
}

complex reflection(const Netlist& n, double omega) {
    const TwoPort t = cascade(n.elements, omega);
    if (n.has_inverter()) {
        return to_s(t, n.z_source, n.z_load).s11;
    }
    // one-port: chain terminated by its own last shunt element, output open
    if (std::abs(t.c) < 1e-300) throw numeric_error("reflection: open-circuit input (C = 0)");
    const complex zin = t.a / t.c;
    return (zin - n.z_source) / (zin + n.z_source);
}

GainTrace gain_sweep(const Netlist& n, double f_start_hz, double f_stop_hz, int n_points) {
    if (!(f_start_hz < f_stop_hz)) throw std::invalid_argument("gain_sweep: bad frequency grid");
    if (n_points < 2) throw std::invalid_argument("gain_sweep: need at least 2 points");
    GainTrace trace;
    trace.frequency_hz.reserve(n_points);
    trace.sqrt_gs.reserve(n_points);
    const double step = (f_stop_hz - f_start_hz) / (n_points - 1);
    for (int i = 0; i < n_points; ++i) {
        const double f = f_start_hz + step * i;
        trace.frequency_hz.push_back(f);
        trace.sqrt_gs.push_back(reflection(n, 2.0 * constants::pi * f));
        trace.sqrt_gi.push_back(complex{});
    }
    return trace;
}

ElementDrive element_drive(const Netlist& n, std::size_t index, double omega, double vg_peak) {
    if (index >= n.elements.size()) throw std::invalid_argument("element_drive: index out of range");
    const TwoPort t = cascade(n.elements, omega);
    complex zin;
    if (n.has_inverter()) {
        zin = (t.a * n.z_load + t.b) / (t.c * n.z_load + t.d);
    } else {
        if (std::abs(t.c) < 1e-300) throw numeric_error("element_drive: open input");
        zin = t.a / t.c;
    }
    complex v = vg_peak * zin / (n.z_source + zin);
    complex i = vg_peak / (n.z_source + zin);
    for (std::size_t k = 0; k < index; ++k) {
        const TwoPort e = element_abcd(n.elements[k], omega);
        const complex det = e.det();
        const complex v2 = (e.d * v - e.b * i) / det;
        const complex i2 = (-e.c * v + e.a * i) / det;
        v = v2;
        i = i2;
    }
    ElementDrive out;
    out.v_node = v;
    const Element& el = n.elements[index];
    const TwoPort e = element_abcd(el, omega);
    // shunt element: branch current = Y v = C * v (ABCD of a shunt is [[1,0],[Y,1]])
    out.i_element = e.c * v;
    return out;
}

} // namespace paramp
