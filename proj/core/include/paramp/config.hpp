#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace paramp {

/// Configuration/usage problem: maps to process exit code 1.
struct config_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DesignConfig {
    double f0_hz = 0.0;
    double fractional_bandwidth = 0.0;
    std::vector<double> g;
    double z1 = 0.0, z2 = 0.0, z3 = 0.0, z0 = 0.0;
    double theta_trim_deg = 0.0;

    bool operator==(const DesignConfig&) const = default;
};

struct SnakeConfig {
    int n_total = 0;
    double ic_a = 0.0, l1s_h = 0.0, l2s_h = 0.0, lb_h = 0.0;

    bool operator==(const SnakeConfig&) const = default;
};

struct PumpConfig {
    std::optional<double> delta_p_rad;
    std::optional<double> target_gain_db;

    bool operator==(const PumpConfig&) const = default;
};

struct TlsConfig {
    double t1_s = 0.0, t2_s = 0.0, qi = 0.0;
    double dipole_debye = 1.0;
    double t_diel_m = 100e-9;
    std::optional<double> k3_per_v2;
    std::optional<double> k3_from_p1db_dbm;

    bool operator==(const TlsConfig&) const = default;
};

struct SweepConfig {
    std::optional<double> f_start_hz, f_stop_hz;
    std::optional<int> n_points;
    std::optional<double> p_start_dbm, p_stop_dbm;
    std::optional<int> p_points;
    std::vector<double> delta_f_hz;

    bool operator==(const SweepConfig&) const = default;
};

struct RunConfig {
    std::optional<DesignConfig> design;
    std::optional<SnakeConfig> snake;
    std::optional<PumpConfig> pump;
    std::optional<TlsConfig> tls;
    std::optional<SweepConfig> sweep;

    bool operator==(const RunConfig&) const = default;
};

/// INI-style parser: [section] headers, key = value lines, '#' comments.
/// Unknown sections or keys are rejected with their line number.
RunConfig parse_config(const std::string& text);

/// Canonical INI rendering; parse_config(serialize_config(c)) == c.
std::string serialize_config(const RunConfig& c);

/// Apply a "section.key=value" override.
void apply_override(RunConfig& c, const std::string& spec);

/// Built-in fixtures; "paper_design" holds the reference amplifier.
RunConfig fixture_config(const std::string& name);

/// 64-bit FNV-1a of the canonical serialization, as hex.
std::string config_hash(const RunConfig& c);

} // namespace paramp
