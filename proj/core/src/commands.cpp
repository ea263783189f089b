#include "paramp/commands.hpp"

#include "paramp/abcd.hpp"
#include "paramp/coupled_mode.hpp"
#include "paramp/nonlinear.hpp"
#include "paramp/numeric.hpp"
#include "paramp/report.hpp"
#include "paramp/svg.hpp"
#include "paramp/tls_imd.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

namespace paramp {

namespace fs = std::filesystem;
using nlohmann::json;
using constants::pi;

namespace {

constexpr double kHemtNoiseK = 2.5;  // cryogenic follow-up amplifier noise temperature

double round_sig(double v, int digits = 3) {
    if (v == 0.0) return 0.0;
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.*e", digits - 1, v);
    return std::strtod(buf, nullptr);
}

const DesignConfig& need_design(const RunConfig& c) {
    if (!c.design) throw config_error("missing required section [design]");
    return *c.design;
}

const SnakeConfig& need_snake(const RunConfig& c) {
    if (!c.snake) throw config_error("missing required section [snake]");
    return *c.snake;
}

const SweepConfig& need_sweep(const RunConfig& c) {
    if (!c.sweep) throw config_error("missing required section [sweep]");
    return *c.sweep;
}

ChebyshevPrototype prototype_of(const RunConfig& c) {
    const auto& d = need_design(c);
    ChebyshevPrototype p;
    p.order = static_cast<int>(d.g.size()) - 2;
    p.g = d.g;
    p.design_gain_db = (c.pump && c.pump->target_gain_db) ? *c.pump->target_gain_db : 20.0;
    p.ripple_db = 0.5;
    return p;
}

BandSpec band_of(const DesignConfig& d) {
    return BandSpec{d.f0_hz, d.fractional_bandwidth};
}

ImpedancePlan plan_of(const DesignConfig& d) { return ImpedancePlan{d.z1, d.z2, d.z3, d.z0}; }

SnakeParams snake_of(const SnakeConfig& s) {
    return SnakeParams{s.n_total, s.ic_a, s.l1s_h, s.l2s_h, s.lb_h};
}

json metadata(const RunConfig& c, const std::string& command) {
    return json{{"command", command}, {"config_hash", config_hash(c)}, {"tool_version", kToolVersion}};
}

struct PumpedAmplifier {
    OperatingPoint op;
    ComponentSet components;  // with l_snake at the pumped value
};

/// Resolve the pump section into an operating point (explicit delta_p or
/// calibrated to the target gain) and the matching pumped netlist components.
PumpedAmplifier resolve_pump(const RunConfig& cfg, const ComponentSet& c) {
    const auto& d = need_design(cfg);
    if (!cfg.pump) throw config_error("missing required section [pump]");
    const auto snake = snake_of(need_snake(cfg));
    const double omega0 = 2.0 * pi * d.f0_hz;
    const double omega_p = 2.0 * omega0;
    const double delta0 = solve_bias(snake, d.z1 / omega0);

    double f_lo = 0.85 * d.f0_hz, f_hi = 1.05 * d.f0_hz;
    if (cfg.sweep && cfg.sweep->f_start_hz && cfg.sweep->f_stop_hz) {
        f_lo = *cfg.sweep->f_start_hz;
        f_hi = *cfg.sweep->f_stop_hz;
    }

    PumpedAmplifier out;
    if (cfg.pump->target_gain_db) {
        out.op = calibrate_pump(c, snake, delta0, omega_p, *cfg.pump->target_gain_db, f_lo, f_hi,
                                d.z0);
    } else if (cfg.pump->delta_p_rad) {
        out.op.pump = PumpOperatingPoint{delta0, *cfg.pump->delta_p_rad, omega_p};
        out.op.lin = pump_to_jpa(snake, out.op.pump);
        ComponentSet cc = c;
        cc.l_snake_h = out.op.lin.l_eff_h;
        const auto trace =
            gain_sweep(amplifier_netlist(cc, out.op.lin.j_pa_s, omega_p, d.z0), f_lo, f_hi, 801);
        std::size_t pk = 0;
        for (std::size_t i = 1; i < trace.frequency_hz.size(); ++i) {
            if (std::abs(trace.sqrt_gs[i]) > std::abs(trace.sqrt_gs[pk])) pk = i;
        }
        out.op.f_peak_hz = trace.frequency_hz[pk];
        out.op.peak_gain_db = trace.gain_db(pk);
        const auto bm = band_metrics(trace, trace.gain_db(pk));
        out.op.f_center_hz = bm.center_hz;
    } else {
        throw config_error("pump: need delta_p_rad or target_gain_db");
    }
    out.components = c;
    out.components.l_snake_h = out.op.lin.l_eff_h;
    return out;
}

json operating_json(const OperatingPoint& op) {
    return json{{"delta0_rad", op.pump.delta0_rad},
                {"delta_p_rad", op.pump.delta_p_rad},
                {"omega_p_rad_s", op.pump.omega_p},
                {"l_eff_h", op.lin.l_eff_h},
                {"j_pa_s", op.lin.j_pa_s},
                {"f_peak_hz", op.f_peak_hz},
                {"f_center_hz", op.f_center_hz},
                {"peak_gain_db", op.peak_gain_db}};
}

double volts_to_dbm_floor(double v, double z0) {
    if (v <= 0.0) return -400.0;
    return std::max(-400.0, watts_to_dbm(v * v / (2.0 * z0)));
}

} // namespace

CommandOutput cmd_synth(const RunConfig& cfg, const fs::path& out_dir) {
    const auto& d = need_design(cfg);
    const auto& sn = need_snake(cfg);
    const auto p = prototype_of(cfg);
    const auto band = band_of(d);
    const auto plan = plan_of(d);
    const auto snake = snake_of(sn);

    const auto comp = realize_network(p, band, plan, d.theta_trim_deg);
    const auto rc = reduced_couplings(p, band);
    const auto jpa = jpa_value(p, d.fractional_bandwidth, d.z1);
    const double delta0 = solve_bias(snake, d.z1 / band.omega0());

    json out;
    out["metadata"] = metadata(cfg, "synth");
    out["component_set"] = {
        {"c1_f", comp.c1_f},       {"c2_f", comp.c2_f},
        {"c12_f", comp.c12_f},     {"c23_f", comp.c23_f},
        {"l2_h", comp.l2_h},       {"l34_h", comp.l34_h},
        {"z3_ohm", comp.z3_ohm},   {"theta_deg", comp.theta_deg},
        {"theta_trim_deg", comp.theta_trim_deg}, {"l_snake_h", comp.l_snake_h},
    };
    out["formatted"] = {
        {"c1_pf", round_sig(comp.c1_f * 1e12)},     {"c2_pf", round_sig(comp.c2_f * 1e12)},
        {"c12_pf", round_sig(comp.c12_f * 1e12)},   {"c23_pf", round_sig(comp.c23_f * 1e12)},
        {"l2_nh", round_sig(comp.l2_h * 1e9)},      {"l34_nh", round_sig(comp.l34_h * 1e9)},
        {"l_snake_ph", round_sig(comp.l_snake_h * 1e12)},
        {"theta_deg", round_sig(comp.theta_deg)},
        {"theta_effective_deg", round_sig(comp.theta_effective_deg())},
    };
    out["reduced_couplings"] = {
        {"gamma0_rad_s", rc.gamma0},
        {"gamma0_over_2pi_hz", rc.gamma0 / (2.0 * pi)},
        {"beta12", rc.beta12},
        {"beta23", rc.beta23},
        {"beta_p", rc.beta_p},
    };
    out["j_pa"] = {{"prototype_form_s", jpa.prototype_form}, {"gain_form_s", jpa.gain_form}};
    out["bias_delta0_rad"] = delta0;

    CommandOutput result;
    const fs::path path = out_dir / "synth.json";
    atomic_write(path, out.dump(2) + "\n");
    result.files.push_back(path);
    return result;
}

CommandOutput cmd_gain(const RunConfig& cfg, const std::string& engine, const fs::path& out_dir) {
    const auto& d = need_design(cfg);
    const auto& sw = need_sweep(cfg);
    if (!sw.f_start_hz || !sw.f_stop_hz || !sw.n_points) {
        throw config_error("sweep: f_start_hz, f_stop_hz and n_points are required for gain");
    }
    const double design_gain =
        (cfg.pump && cfg.pump->target_gain_db) ? *cfg.pump->target_gain_db : 20.0;

    CommandOutput result;
    GainTrace trace;
    json bandj;
    if (engine == "cm") {
        const auto graph = ModeGraph::from_prototype(prototype_of(cfg), band_of(d));
        trace = sweep(graph, *sw.f_start_hz, *sw.f_stop_hz, *sw.n_points);
        CsvTable t;
        t.columns = {"frequency_hz", "gain_db", "phase_deg", "idler_gain_db"};
        for (std::size_t i = 0; i < trace.frequency_hz.size(); ++i) {
            t.rows.push_back({trace.frequency_hz[i], trace.gain_db(i),
                              rad_to_deg(std::arg(trace.sqrt_gs[i])),
                              amp_to_db(trace.sqrt_gi[i])});
        }
        const fs::path csv = out_dir / "gain_cm.csv";
        atomic_write(csv, render_csv(t));
        result.files.push_back(csv);
    } else if (engine == "abcd") {
        const auto comp = realize_network(prototype_of(cfg), band_of(d), plan_of(d), d.theta_trim_deg);
        Netlist n;
        if (cfg.pump) {
            const auto pumped = resolve_pump(cfg, comp);
            n = amplifier_netlist(pumped.components, pumped.op.lin.j_pa_s, pumped.op.pump.omega_p,
                                  d.z0);
            bandj["operating"] = operating_json(pumped.op);
        } else {
            n = passive_netlist(comp, 2.0 * pi * d.f0_hz, d.z0);
        }
        trace = gain_sweep(n, *sw.f_start_hz, *sw.f_stop_hz, *sw.n_points);
        CsvTable t;
        t.columns = {"frequency_hz", "gain_db", "phase_deg"};
        for (std::size_t i = 0; i < trace.frequency_hz.size(); ++i) {
            t.rows.push_back({trace.frequency_hz[i], trace.gain_db(i),
                              rad_to_deg(std::arg(trace.sqrt_gs[i]))});
        }
        const fs::path csv = out_dir / "gain_abcd.csv";
        atomic_write(csv, render_csv(t));
        result.files.push_back(csv);
    } else {
        throw config_error("unknown engine '" + engine + "' (use cm or abcd)");
    }

    bandj["metadata"] = metadata(cfg, "gain/" + engine);
    try {
        const auto bm = band_metrics(trace, design_gain);
        bandj["band"] = {{"center_hz", bm.center_hz},
                         {"bandwidth_hz", bm.bandwidth_hz},
                         {"ripple_db", bm.ripple_db}};
    } catch (const std::exception& e) {
        bandj["band"] = nullptr;
        bandj["band_note"] = e.what();
    }
    const fs::path jpath = out_dir / ("gain_" + engine + "_band.json");
    atomic_write(jpath, bandj.dump(2) + "\n");
    result.files.push_back(jpath);
    return result;
}

CommandOutput cmd_compress(const RunConfig& cfg, const fs::path& out_dir) {
    const auto& d = need_design(cfg);
    const auto& sw = need_sweep(cfg);
    if (!sw.p_start_dbm || !sw.p_stop_dbm || !sw.p_points) {
        throw config_error("sweep: p_start_dbm, p_stop_dbm and p_points are required for compress");
    }
    const auto comp = realize_network(prototype_of(cfg), band_of(d), plan_of(d), d.theta_trim_deg);
    const auto pumped = resolve_pump(cfg, comp);

    CompressionSetup setup;
    setup.components = comp;  // l_snake replaced per iteration by the pumped value
    setup.snake = snake_of(need_snake(cfg));
    setup.op = pumped.op.pump;
    setup.f_meas_hz = pumped.op.f_center_hz;
    setup.z0 = d.z0;

    std::vector<double> powers(static_cast<std::size_t>(*sw.p_points));
    for (std::size_t i = 0; i < powers.size(); ++i) {
        powers[i] = *sw.p_start_dbm +
                    (*sw.p_stop_dbm - *sw.p_start_dbm) * static_cast<double>(i) /
                        (powers.size() - 1);
    }
    const auto curve = compression_sweep(setup, powers);

    bool any_converged = false;
    for (bool c : curve.converged) any_converged |= c;
    if (!any_converged) throw numeric_error("compress: no power point converged");

    CsvTable t;
    t.columns = {"pin_dbm", "gain_db", "converged"};
    for (std::size_t i = 0; i < curve.pin_dbm.size(); ++i) {
        t.rows.push_back({curve.pin_dbm[i], curve.gain_db[i], curve.converged[i] ? 1.0 : 0.0});
    }

    json out;
    out["metadata"] = metadata(cfg, "compress");
    out["operating"] = operating_json(pumped.op);
    out["f_meas_hz"] = setup.f_meas_hz;
    try {
        const auto p1 = p1db(curve);
        out["input_p1db_dbm"] = p1.input_dbm;
        out["output_p1db_dbm"] = p1.output_dbm;
        const double k3 = k3_from_p1db(p1.input_dbm, d.z0);
        out["k3_per_v2"] = k3;
        out["k3_per_uv2"] = k3 * 1e-12;
        // phase change of the amplified signal at the 1 dB point
        double ph1 = curve.phase_deg.front();
        for (std::size_t i = 1; i < curve.pin_dbm.size(); ++i) {
            if (curve.pin_dbm[i] >= p1.input_dbm) {
                const double f = (p1.input_dbm - curve.pin_dbm[i - 1]) /
                                 (curve.pin_dbm[i] - curve.pin_dbm[i - 1]);
                ph1 = curve.phase_deg[i - 1] + f * (curve.phase_deg[i] - curve.phase_deg[i - 1]);
                break;
            }
        }
        out["phase_change_at_p1db_deg"] = ph1 - curve.phase_deg.front();
    } catch (const std::exception& e) {
        out["input_p1db_dbm"] = nullptr;
        out["output_p1db_dbm"] = nullptr;
        out["p1db_note"] = e.what();
    }
    NoiseModelParams nm{kHemtNoiseK, setup.f_meas_hz};
    out["system_noise_model_db"] = system_noise_model(curve, nm);
    out["phase_deg"] = curve.phase_deg;

    CommandOutput result;
    const fs::path csv = out_dir / "compress.csv";
    atomic_write(csv, render_csv(t));
    result.files.push_back(csv);
    const fs::path jpath = out_dir / "compress.json";
    atomic_write(jpath, out.dump(2) + "\n");
    result.files.push_back(jpath);
    return result;
}

CommandOutput cmd_imd(const RunConfig& cfg, const fs::path& out_dir) {
    const auto& d = need_design(cfg);
    if (!cfg.tls) throw config_error("missing required section [tls]");
    const auto& sw = need_sweep(cfg);
    if (!sw.p_start_dbm || !sw.p_stop_dbm || !sw.p_points) {
        throw config_error("sweep: p_start_dbm, p_stop_dbm and p_points are required for imd");
    }
    if (sw.delta_f_hz.empty()) throw config_error("sweep.delta_f_hz is required for imd");

    const auto& tc = *cfg.tls;
    TlsBathParams bath;
    bath.t1_s = tc.t1_s;
    bath.t2_s = tc.t2_s;
    bath.qi = tc.qi;
    bath.dipole_cm = tc.dipole_debye * constants::debye;
    bath.t_diel_m = tc.t_diel_m;

    ImdDriveMap map;
    map.gain = std::pow(10.0, ((cfg.pump && cfg.pump->target_gain_db) ? *cfg.pump->target_gain_db
                                                                      : 20.0) / 10.0);
    map.w = d.fractional_bandwidth;
    map.g1 = d.g.at(1);
    map.g4 = d.g.back();
    map.z1 = d.z1;
    map.z0 = d.z0;
    map.omega0 = 2.0 * pi * d.f0_hz;
    if (tc.k3_per_v2) map.k3_per_v2 = *tc.k3_per_v2;
    else if (tc.k3_from_p1db_dbm) map.k3_per_v2 = k3_from_p1db(*tc.k3_from_p1db_dbm, d.z0);
    else throw config_error("tls: need k3_per_v2 or k3_from_p1db_dbm");

    CommandOutput result;
    for (const double df : sw.delta_f_hz) {
        CsvTable t;
        t.columns = {"pin_dbm", "im3_dbm", "tls3_dbm", "kerr3_dbm", "im5_dbm", "valid"};
        for (int i = 0; i < *sw.p_points; ++i) {
            const double p = *sw.p_start_dbm + (*sw.p_stop_dbm - *sw.p_start_dbm) *
                                                   static_cast<double>(i) / (*sw.p_points - 1);
            const double v_in = watts_to_peak_volts(dbm_to_watts(p), d.z0);
            const auto pt = im_output(v_in, df, map, bath);
            t.rows.push_back({p, volts_to_dbm_floor(pt.v_out3, d.z0),
                              volts_to_dbm_floor(pt.v_tls3, d.z0),
                              volts_to_dbm_floor(pt.v_kerr3, d.z0),
                              volts_to_dbm_floor(pt.v_out5, d.z0), pt.valid ? 1.0 : 0.0});
        }
        char name[64];
        std::snprintf(name, sizeof name, "imd_df%ghz.csv", df);
        const fs::path csv = out_dir / name;
        atomic_write(csv, render_csv(t));
        result.files.push_back(csv);
    }
    return result;
}

CommandOutput cmd_plot(const std::vector<fs::path>& csv_paths, const fs::path& out_svg) {
    if (csv_paths.empty()) throw config_error("plot: no CSV files given");
    static const std::set<std::string> known_schemas[] = {
        {"frequency_hz", "gain_db", "phase_deg", "idler_gain_db"},
        {"frequency_hz", "gain_db", "phase_deg"},
        {"pin_dbm", "gain_db", "converged"},
        {"pin_dbm", "im3_dbm", "tls3_dbm", "kerr3_dbm", "im5_dbm", "valid"},
    };
    std::vector<SvgSeries> series;
    std::string x_label;
    for (const auto& path : csv_paths) {
        std::ifstream in(path);
        if (!in) throw config_error("plot: cannot read " + path.string());
        std::stringstream ss;
        ss << in.rdbuf();
        const auto table = parse_csv(ss.str());
        const std::set<std::string> cols(table.columns.begin(), table.columns.end());
        bool ok = false;
        for (const auto& schema : known_schemas) ok |= (cols == schema);
        if (!ok) throw config_error("plot: " + path.string() + " does not match a known schema");

        const bool freq = table.columns.front() == "frequency_hz";
        x_label = freq ? "frequency (GHz)" : table.columns.front();
        for (std::size_t ci = 1; ci < table.columns.size(); ++ci) {
            const auto& col = table.columns[ci];
            if (col == "converged" || col == "valid" || col == "phase_deg") continue;
            SvgSeries s;
            s.label = path.stem().string() + ":" + col;
            for (const auto& row : table.rows) {
                s.x.push_back(freq ? row[0] / 1e9 : row[0]);
                s.y.push_back(row[ci]);
            }
            series.push_back(std::move(s));
        }
    }
    const std::string svg = render_svg_chart(series, x_label, "dB");
    atomic_write(out_svg, svg);
    CommandOutput result;
    result.files.push_back(out_svg);
    return result;
}

ComponentSet component_set_from_json_text(const std::string& json_text) {
    const json j = json::parse(json_text);
    const json& c = j.contains("component_set") ? j.at("component_set") : j;
    ComponentSet out;
    out.c1_f = c.at("c1_f").get<double>();
    out.c2_f = c.at("c2_f").get<double>();
    out.c12_f = c.at("c12_f").get<double>();
    out.c23_f = c.at("c23_f").get<double>();
    out.l2_h = c.at("l2_h").get<double>();
    out.l34_h = c.at("l34_h").get<double>();
    out.z3_ohm = c.at("z3_ohm").get<double>();
    out.theta_deg = c.at("theta_deg").get<double>();
    out.theta_trim_deg = c.at("theta_trim_deg").get<double>();
    out.l_snake_h = c.at("l_snake_h").get<double>();
    return out;
}

} // namespace paramp
