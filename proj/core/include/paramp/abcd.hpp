#pragma once

#include "paramp/coupled_mode.hpp"
#include "paramp/synthesis.hpp"

#include <optional>
#include <variant>
#include <vector>

namespace paramp {

/// 2x2 ABCD (transmission) matrix of a two-port.
struct TwoPort {
    complex a{1.0}, b{}, c{}, d{1.0};

    complex det() const { return a * d - b * c; }
    TwoPort operator*(const TwoPort& rhs) const {
        return {a * rhs.a + b * rhs.c, a * rhs.b + b * rhs.d,
                c * rhs.a + d * rhs.c, c * rhs.b + d * rhs.d};
    }
};

struct SParams {
    complex s11, s21, s12, s22;
};

enum class Placement { shunt, series };

// ---- netlist elements -------------------------------------------------

struct Capacitor {
    double c_f = 0.0;
    Placement placement = Placement::shunt;
};

struct Inductor {
    double l_h = 0.0;
    Placement placement = Placement::shunt;
};

/// Shunt parallel LC block (resonator 2).
struct ParallelLC {
    double l_h = 0.0;
    double c_f = 0.0;
};

struct TLine {
    double z_ohm = 0.0;
    double theta_deg = 0.0;  // electrical length at omega0
    double omega0 = 0.0;
};

/// Phase-conjugating admittance inverter coupling signal and idler circuits.
struct ParametricInverter {
    double j_pa_s = 0.0;
};

/// One netlist entry: a concrete element, evaluated either at the signal
/// frequency or (idler variants) at omega - omega_p.
struct Element {
    std::variant<Capacitor, Inductor, ParallelLC, TLine, ParametricInverter> kind;
    bool idler = false;
    double omega_p = 0.0;  // used when idler is true
};

/// Ordered element list from the signal port toward the idler port. A netlist
/// without a ParametricInverter is read as a one-port (pump off).
struct Netlist {
    std::vector<Element> elements;
    double z_source = 50.0;
    double z_load = 50.0;

    bool has_inverter() const;
};

TwoPort element_abcd(const Element& e, double omega);
TwoPort cascade(const std::vector<Element>& elements, double omega);
SParams to_s(const TwoPort& t, double zs, double zl);

/// Amplifier netlist: signal-side matching chain, the parametric inverter,
/// and the mirrored idler chain (each element in (omega - omega_p) form).
Netlist amplifier_netlist(const ComponentSet& c, double j_pa_s, double omega_p,
                          double z0 = 50.0);

/// Signal-side chain only, idler branch removed: the pump-off one-port.
Netlist passive_netlist(const ComponentSet& c, double omega0, double z0 = 50.0);

/// |S11| trace: reflection gain off the signal port, idler port terminated in
/// the load impedance; one-port reflection when no inverter is present.
GainTrace gain_sweep(const Netlist& n, double f_start_hz, double f_stop_hz, int n_points);

complex reflection(const Netlist& n, double omega);

/// Node voltage and branch current of element `index` at the given drive:
/// source EMF amplitude vg behind z_source, load z_load. For shunt elements
/// the returned current is the current into the shunt.
struct ElementDrive {
    complex v_node;
    complex i_element;
};
ElementDrive element_drive(const Netlist& n, std::size_t index, double omega, double vg_peak);

} // namespace paramp
