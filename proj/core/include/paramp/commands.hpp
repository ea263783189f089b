#pragma once

#include "paramp/config.hpp"
#include "paramp/synthesis.hpp"

#include <filesystem>
#include <vector>

namespace paramp {

inline constexpr const char* kToolVersion = "0.1.0";

struct CommandOutput {
    std::vector<std::filesystem::path> files;
};

/// synth: component values, couplings, inverter value and bias report (JSON).
CommandOutput cmd_synth(const RunConfig& config, const std::filesystem::path& out_dir);

/// gain: frequency sweep CSV (+ band metrics JSON). engine is "cm" or "abcd".
CommandOutput cmd_gain(const RunConfig& config, const std::string& engine,
                       const std::filesystem::path& out_dir);

/// compress: power sweep CSV + P1dB/K3/noise JSON.
CommandOutput cmd_compress(const RunConfig& config, const std::filesystem::path& out_dir);

/// imd: one CSV per inter-tone detuning value.
CommandOutput cmd_imd(const RunConfig& config, const std::filesystem::path& out_dir);

/// plot: overlay chart of the given CSV files.
CommandOutput cmd_plot(const std::vector<std::filesystem::path>& csv_paths,
                       const std::filesystem::path& out_svg);

/// Re-read the SI component_set object of a synth report.
ComponentSet component_set_from_json_text(const std::string& json_text);

} // namespace paramp
