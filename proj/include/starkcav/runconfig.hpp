// runconfig.hpp — CLI/config-file option handling for the starkcav tool.
//
// Configuration is a flat `key = value` file with `#` comments; command-line
// flags override file values.  All frequencies are interpreted in a common
// unit named by `unit` (defaults: "g" for simulate/compare, "kappa" for
// sweep-eta, "Hz" for estimate); the unit label is echoed into the CSV
// header.  resolve() applies per-command defaults and validates.

#pragma once

#include "starkcav/dynamics.hpp"

#include <optional>
#include <string>
#include <vector>

namespace starkcav::cli {

enum class Command { simulate, sweep_eta, compare, estimate };

// Raw options: unset fields take per-command defaults at resolve().
struct RunConfig {
    std::optional<std::string> command;
    std::optional<double> g, kappa, delta, efield, omega_drive, omega0;
    std::optional<double> alpha0, efield_dc, dipole;
    std::optional<std::string> tier, unit, out;
    std::optional<int> n_max, sample_every, sweep_steps;
    std::optional<double> t_max, dt, sweep_min, sweep_max;
    std::optional<std::vector<double>> sweep_fields;
};

// `key = value` lines, `#` comments, unknown keys rejected.
RunConfig parse_config_text(const std::string& text);
RunConfig parse_config_file(const std::string& path);

// Fill every unset field of dst from src (dst wins where set).
void fill_missing(RunConfig& dst, const RunConfig& src);

// Fully-defaulted, validated view of one run.
struct ResolvedConfig {
    Command command = Command::simulate;
    dynamics::ModelTier tier = dynamics::ModelTier::averaged;
    dynamics::SystemParams params;
    bool stark_is_polarizability = false;
    double alpha0 = 0.0, efield_dc = 0.0;          // valid when polarizability form
    std::optional<double> dipole, alpha0_estimate; // estimate-only inputs
    double delta_e = 0.0;                          // derived effective detuning
    double t_max = 0.0, dt = 0.0;
    int sample_every = 1;
    double sweep_min = 0.0, sweep_max = 0.0;
    int sweep_steps = 0;
    std::vector<double> sweep_fields;
    std::string unit, out;
};

ResolvedConfig resolve(const RunConfig& rc);

// Effective configuration as `key = value` lines (only the keys the resolved
// command consumes); parsing the dump back reproduces the same resolution.
std::string dump_config(const ResolvedConfig& cfg);

const char* command_name(Command c);
const char* tier_name(dynamics::ModelTier t);

}  // namespace starkcav::cli
