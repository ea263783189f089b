// paramp: design and simulate band-pass matched snake parametric amplifiers.
//
// Subcommands:
//   synth     component synthesis report (JSON)
//   gain      gain vs frequency, coupled-mode or circuit engine (CSV + JSON)
//   compress  gain compression vs input power (CSV + JSON)
//   imd       two-tone TLS/Kerr intermodulation products (CSV)
//   plot      overlay CSVs into a deterministic SVG chart

#include "paramp/commands.hpp"
#include "paramp/config.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

paramp::RunConfig load_config(const std::string& config_path, const std::string& fixture,
                              const std::vector<std::string>& overrides) {
    paramp::RunConfig cfg;
    if (!fixture.empty()) {
        cfg = paramp::fixture_config(fixture);
    }
    if (!config_path.empty()) {
        std::ifstream in(config_path);
        if (!in) throw paramp::config_error("cannot open config file " + config_path);
        std::stringstream ss;
        ss << in.rdbuf();
        cfg = paramp::parse_config(ss.str());
    }
    if (fixture.empty() && config_path.empty()) {
        throw paramp::config_error("give --config FILE or --fixture NAME");
    }
    for (const auto& o : overrides) paramp::apply_override(cfg, o);
    return cfg;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"snake parametric amplifier design & simulation"};
    app.require_subcommand(1);

    std::string config_path, fixture, out_dir = ".", engine = "cm";
    std::vector<std::string> overrides;
    std::vector<std::string> plot_inputs;
    std::string plot_out = "plot.svg";

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--config", config_path, "INI config file");
        cmd->add_option("--fixture", fixture, "built-in fixture name (paper_design)");
        cmd->add_option("--set", overrides, "override section.key=value (repeatable)");
        cmd->add_option("--out", out_dir, "output directory");
    };

    auto* synth = app.add_subcommand("synth", "synthesize component values");
    add_common(synth);
    auto* gain = app.add_subcommand("gain", "gain vs frequency sweep");
    add_common(gain);
    gain->add_option("--engine", engine, "cm | abcd")->check(CLI::IsMember({"cm", "abcd"}));
    auto* compress = app.add_subcommand("compress", "gain compression vs power");
    add_common(compress);
    auto* imd = app.add_subcommand("imd", "two-tone intermodulation products");
    add_common(imd);
    auto* plot = app.add_subcommand("plot", "render CSVs to SVG");
    plot->add_option("csv", plot_inputs, "input CSV files")->required();
    plot->add_option("--out", plot_out, "output SVG path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        paramp::CommandOutput result;
        if (synth->parsed()) {
            result = paramp::cmd_synth(load_config(config_path, fixture, overrides), out_dir);
        } else if (gain->parsed()) {
            result = paramp::cmd_gain(load_config(config_path, fixture, overrides), engine, out_dir);
        } else if (compress->parsed()) {
            result = paramp::cmd_compress(load_config(config_path, fixture, overrides), out_dir);
        } else if (imd->parsed()) {
            result = paramp::cmd_imd(load_config(config_path, fixture, overrides), out_dir);
        } else if (plot->parsed()) {
            std::vector<std::filesystem::path> paths(plot_inputs.begin(), plot_inputs.end());
            result = paramp::cmd_plot(paths, plot_out);
        }
        for (const auto& f : result.files) std::cout << f.string() << "\n";
        return 0;
    } catch (const paramp::config_error& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
