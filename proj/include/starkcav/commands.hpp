// commands.hpp — the four CLI commands and the exit-code mapping.
//
// Exit codes: 0 success, 2 config error, 3 numerical-invariant breach.
// Output files are written in one shot after the computation finishes, so a
// failed run leaves no partial file behind.

#pragma once

#include "starkcav/runconfig.hpp"

#include <iosfwd>
#include <string>

namespace starkcav::cli {

// CSV trajectory `t,rho_ee,p_g1,p_g0,trace`; bytes are deterministic for a
// fixed config.
void cmd_simulate(const ResolvedConfig& cfg, std::ostream& diag);

// CSV table `delta_over_kappa,efield,delta_e,eta`, rows ordered field-major.
void cmd_sweep_eta(const ResolvedConfig& cfg, std::ostream& diag);

// CSV of all three tiers plus per-time deviations; prints a one-line
// max-deviation summary to `out_stream`.
void cmd_compare(const ResolvedConfig& cfg, std::ostream& out_stream, std::ostream& diag);

// Text report of the significance estimate (to `out_stream`, and to cfg.out
// when set).
void cmd_estimate(const ResolvedConfig& cfg, std::ostream& out_stream);

// Resolve + dispatch with exceptions mapped to exit codes; diagnostics go to
// `diag`, command output to `out_stream`.  `dump_path`, when non-empty,
// receives the effective configuration before the command runs.
int run(const RunConfig& rc, const std::string& dump_path,
        std::ostream& out_stream, std::ostream& diag);

}  // namespace starkcav::cli
