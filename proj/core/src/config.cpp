#include "paramp/config.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>

namespace paramp {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

double parse_double(const std::string& v, int line) {
    char* end = nullptr;
    const double x = std::strtod(v.c_str(), &end);
    if (end == v.c_str() || *end != '\0' || !std::isfinite(x)) {
        throw config_error("line " + std::to_string(line) + ": expected a number, got '" + v + "'");
    }
    return x;
}

int parse_int(const std::string& v, int line) {
    const double x = parse_double(v, line);
    if (x != std::floor(x)) {
        throw config_error("line " + std::to_string(line) + ": expected an integer, got '" + v + "'");
    }
    return static_cast<int>(x);
}

std::vector<double> parse_list(const std::string& v, int line) {
    std::vector<double> out;
    std::stringstream ss(v);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_double(trim(item), line));
    if (out.empty()) throw config_error("line " + std::to_string(line) + ": empty list");
    return out;
}

void set_key(RunConfig& c, const std::string& section, const std::string& key,
             const std::string& value, int line) {
    auto bad_key = [&]() -> config_error {
        return config_error("line " + std::to_string(line) + ": unknown key '" + key +
                            "' in section [" + section + "]");
    };
    if (section == "design") {
        if (!c.design) c.design.emplace();
        auto& d = *c.design;
        if (key == "f0_hz") d.f0_hz = parse_double(value, line);
        else if (key == "fractional_bandwidth") d.fractional_bandwidth = parse_double(value, line);
        else if (key == "g") d.g = parse_list(value, line);
        else if (key == "z1") d.z1 = parse_double(value, line);
        else if (key == "z2") d.z2 = parse_double(value, line);
        else if (key == "z3") d.z3 = parse_double(value, line);
        else if (key == "z0") d.z0 = parse_double(value, line);
        else if (key == "theta_trim_deg") d.theta_trim_deg = parse_double(value, line);
        else throw bad_key();
    } else if (section == "snake") {
        if (!c.snake) c.snake.emplace();
        auto& s = *c.snake;
        if (key == "n_total") s.n_total = parse_int(value, line);
        else if (key == "ic_a") s.ic_a = parse_double(value, line);
        else if (key == "l1s_h") s.l1s_h = parse_double(value, line);
        else if (key == "l2s_h") s.l2s_h = parse_double(value, line);
        else if (key == "lb_h") s.lb_h = parse_double(value, line);
        else throw bad_key();
    } else if (section == "pump") {
        if (!c.pump) c.pump.emplace();
        auto& p = *c.pump;
        if (key == "delta_p_rad") p.delta_p_rad = parse_double(value, line);
        else if (key == "target_gain_db") p.target_gain_db = parse_double(value, line);
        else throw bad_key();
    } else if (section == "tls") {
        if (!c.tls) c.tls.emplace();
        auto& t = *c.tls;
        if (key == "t1_s") t.t1_s = parse_double(value, line);
        else if (key == "t2_s") t.t2_s = parse_double(value, line);
        else if (key == "qi") t.qi = parse_double(value, line);
        else if (key == "dipole_debye") t.dipole_debye = parse_double(value, line);
        else if (key == "t_diel_m") t.t_diel_m = parse_double(value, line);
        else if (key == "k3_per_v2") t.k3_per_v2 = parse_double(value, line);
        else if (key == "k3_from_p1db_dbm") t.k3_from_p1db_dbm = parse_double(value, line);
        else throw bad_key();
    } else if (section == "sweep") {
        if (!c.sweep) c.sweep.emplace();
        auto& w = *c.sweep;
        if (key == "f_start_hz") w.f_start_hz = parse_double(value, line);
        else if (key == "f_stop_hz") w.f_stop_hz = parse_double(value, line);
        else if (key == "n_points") w.n_points = parse_int(value, line);
        else if (key == "p_start_dbm") w.p_start_dbm = parse_double(value, line);
        else if (key == "p_stop_dbm") w.p_stop_dbm = parse_double(value, line);
        else if (key == "p_points") w.p_points = parse_int(value, line);
        else if (key == "delta_f_hz") w.delta_f_hz = parse_list(value, line);
        else throw bad_key();
    } else {
        throw config_error("line " + std::to_string(line) + ": unknown section [" + section + "]");
    }
}

void validate(const RunConfig& c) {
    if (c.design) {
        const auto& d = *c.design;
        if (!(d.f0_hz > 0)) throw config_error("design.f0_hz must be positive");
        if (d.fractional_bandwidth < 0) throw config_error("design.fractional_bandwidth must be non-negative");
        if (d.g.size() < 3) throw config_error("design.g needs at least 3 coefficients");
        if (!(d.z1 > 0 && d.z2 > 0 && d.z3 > 0 && d.z0 > 0)) {
            throw config_error("design.z1..z0 must be positive");
        }
    }
    if (c.snake) {
        const auto& s = *c.snake;
        if (s.n_total <= 0 || s.n_total % 2 != 0) throw config_error("snake.n_total must be even and positive");
        if (!(s.ic_a > 0)) throw config_error("snake.ic_a must be positive");
        if (s.l1s_h < 0 || s.l2s_h < 0 || s.lb_h < 0) throw config_error("snake inductances must be non-negative");
    }
    if (c.pump) {
        const auto& p = *c.pump;
        if (p.delta_p_rad && *p.delta_p_rad < 0) throw config_error("pump.delta_p_rad must be non-negative");
        if (p.delta_p_rad && p.target_gain_db) {
            throw config_error("pump: give delta_p_rad or target_gain_db, not both");
        }
    }
    if (c.tls) {
        const auto& t = *c.tls;
        if (!(t.t1_s > 0 && t.t2_s > 0 && t.qi > 0)) throw config_error("tls.t1_s/t2_s/qi must be positive");
        if (!(t.t_diel_m > 0)) throw config_error("tls.t_diel_m must be positive");
        if (t.k3_per_v2 && t.k3_from_p1db_dbm) {
            throw config_error("tls: give k3_per_v2 or k3_from_p1db_dbm, not both");
        }
    }
    if (c.sweep) {
        const auto& w = *c.sweep;
        if (w.f_start_hz && w.f_stop_hz && !(*w.f_start_hz < *w.f_stop_hz)) {
            throw config_error("sweep.f_start_hz must be below sweep.f_stop_hz");
        }
        if (w.n_points && *w.n_points < 2) throw config_error("sweep.n_points must be >= 2");
        if (w.p_points && *w.p_points < 2) throw config_error("sweep.p_points must be >= 2");
    }
}

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

} // namespace

RunConfig parse_config(const std::string& text) {
    RunConfig c;
    std::istringstream in(text);
    std::string raw;
    std::string section;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        const auto hash = raw.find('#');
        std::string s = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
        if (s.empty()) continue;
        if (s.front() == '[') {
            if (s.back() != ']') throw config_error("line " + std::to_string(line) + ": unterminated section header");
            section = trim(s.substr(1, s.size() - 2));
            if (section.empty()) throw config_error("line " + std::to_string(line) + ": empty section name");
            continue;
        }
        const auto eq = s.find('=');
        if (eq == std::string::npos) {
            throw config_error("line " + std::to_string(line) + ": expected key = value");
        }
        if (section.empty()) {
            throw config_error("line " + std::to_string(line) + ": key outside any section");
        }
        set_key(c, section, trim(s.substr(0, eq)), trim(s.substr(eq + 1)), line);
    }
    validate(c);
    return c;
}

std::string serialize_config(const RunConfig& c) {
    std::ostringstream out;
    if (c.design) {
        const auto& d = *c.design;
        out << "[design]\n";
        out << "f0_hz = " << fmt(d.f0_hz) << "\n";
        out << "fractional_bandwidth = " << fmt(d.fractional_bandwidth) << "\n";
        out << "g = ";
        for (std::size_t i = 0; i < d.g.size(); ++i) out << (i ? ", " : "") << fmt(d.g[i]);
        out << "\n";
        out << "z1 = " << fmt(d.z1) << "\n";
        out << "z2 = " << fmt(d.z2) << "\n";
        out << "z3 = " << fmt(d.z3) << "\n";
        out << "z0 = " << fmt(d.z0) << "\n";
        out << "theta_trim_deg = " << fmt(d.theta_trim_deg) << "\n";
    }
    if (c.snake) {
        const auto& s = *c.snake;
        out << "[snake]\n";
        out << "n_total = " << s.n_total << "\n";
        out << "ic_a = " << fmt(s.ic_a) << "\n";
        out << "l1s_h = " << fmt(s.l1s_h) << "\n";
        out << "l2s_h = " << fmt(s.l2s_h) << "\n";
        out << "lb_h = " << fmt(s.lb_h) << "\n";
    }
    if (c.pump) {
        const auto& p = *c.pump;
        out << "[pump]\n";
        if (p.delta_p_rad) out << "delta_p_rad = " << fmt(*p.delta_p_rad) << "\n";
        if (p.target_gain_db) out << "target_gain_db = " << fmt(*p.target_gain_db) << "\n";
    }
    if (c.tls) {
        const auto& t = *c.tls;
        out << "[tls]\n";
        out << "t1_s = " << fmt(t.t1_s) << "\n";
        out << "t2_s = " << fmt(t.t2_s) << "\n";
        out << "qi = " << fmt(t.qi) << "\n";
        out << "dipole_debye = " << fmt(t.dipole_debye) << "\n";
        out << "t_diel_m = " << fmt(t.t_diel_m) << "\n";
        if (t.k3_per_v2) out << "k3_per_v2 = " << fmt(*t.k3_per_v2) << "\n";
        if (t.k3_from_p1db_dbm) out << "k3_from_p1db_dbm = " << fmt(*t.k3_from_p1db_dbm) << "\n";
    }
    if (c.sweep) {
        const auto& w = *c.sweep;
        out << "[sweep]\n";
        if (w.f_start_hz) out << "f_start_hz = " << fmt(*w.f_start_hz) << "\n";
        if (w.f_stop_hz) out << "f_stop_hz = " << fmt(*w.f_stop_hz) << "\n";
        if (w.n_points) out << "n_points = " << *w.n_points << "\n";
        if (w.p_start_dbm) out << "p_start_dbm = " << fmt(*w.p_start_dbm) << "\n";
        if (w.p_stop_dbm) out << "p_stop_dbm = " << fmt(*w.p_stop_dbm) << "\n";
        if (w.p_points) out << "p_points = " << *w.p_points << "\n";
        if (!w.delta_f_hz.empty()) {
            out << "delta_f_hz = ";
            for (std::size_t i = 0; i < w.delta_f_hz.size(); ++i) {
                out << (i ? ", " : "") << fmt(w.delta_f_hz[i]);
            }
            out << "\n";
        }
    }
    return out.str();
}

void apply_override(RunConfig& c, const std::string& spec) {
    const auto eq = spec.find('=');
    const auto dot = spec.find('.');
    if (eq == std::string::npos || dot == std::string::npos || dot > eq) {
        throw config_error("override '" + spec + "': expected section.key=value");
    }
    set_key(c, trim(spec.substr(0, dot)), trim(spec.substr(dot + 1, eq - dot - 1)),
            trim(spec.substr(eq + 1)), 0);
    RunConfig check = c;
    (void)check;
    // re-validate the whole config after the edit
    const std::string round = serialize_config(c);
    c = parse_config(round);
}

RunConfig fixture_config(const std::string& name) {
    if (name == "paper_design") {
        return parse_config(R"(# reference three-pole snake amplifier
[design]
f0_hz = 4.9e9
fractional_bandwidth = 0.135
g = 1.0, 0.5899, 0.6681, 0.3753, 0.9045
z1 = 4.42
z2 = 20.0
z3 = 50.0
z0 = 50.0
theta_trim_deg = 0.0

[snake]
n_total = 40
ic_a = 16e-6
l1s_h = 2.6e-12
l2s_h = 8.0e-12
lb_h = 50e-12

[pump]
target_gain_db = 20.0

[tls]
t1_s = 2e-6
t2_s = 4e-6
qi = 250
dipole_debye = 1.0
t_diel_m = 100e-9
k3_per_v2 = 2.1e9

[sweep]
f_start_hz = 4.4e9
f_stop_hz = 5.4e9
n_points = 1001
p_start_dbm = -140
p_stop_dbm = -82
p_points = 59
delta_f_hz = 1e4
)");
    }
    throw config_error("unknown fixture '" + name + "'");
}

std::string config_hash(const RunConfig& c) {
    const std::string s = serialize_config(c);
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char ch : s) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    char buf[20];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

} // namespace paramp
