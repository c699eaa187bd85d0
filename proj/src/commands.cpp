#include "starkcav/commands.hpp"

#include "starkcav/effective.hpp"
#include "starkcav/format.hpp"

#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

namespace starkcav::cli {

namespace {

std::string header_block(const ResolvedConfig& cfg) {
    std::string s = "# starkcav ";
    s += command_name(cfg.command);
    s += '\n';
    std::stringstream dump(dump_config(cfg));
    std::string line;
    while (std::getline(dump, line)) {
        s += "# ";
        s += line;
        s += '\n';
    }
    return s;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open output file '" + path + "'");
    out << content;
    if (!out) throw std::runtime_error("failed writing output file '" + path + "'");
}

dynamics::Trajectory run_tier(const ResolvedConfig& cfg) {
    const auto rho0 = hilbert::pure_state(hilbert::Atom::excited, 0,
                                          hilbert::SpaceSpec{cfg.params.n_max});
    switch (cfg.tier) {
        case dynamics::ModelTier::full:
            return dynamics::integrate(rho0, dynamics::ModelTier::full, cfg.params,
                                       cfg.t_max, cfg.dt, cfg.sample_every);
        case dynamics::ModelTier::averaged:
            return dynamics::integrate_averaged(rho0, cfg.params, cfg.delta_e,
                                                cfg.t_max, cfg.dt, cfg.sample_every);
        case dynamics::ModelTier::adiabatic:
            return dynamics::adiabatic_trajectory(cfg.params, cfg.delta_e,
                                                  cfg.t_max, cfg.dt, cfg.sample_every);
    }
    throw std::invalid_argument("simulate: unknown tier");
}

}  // namespace

void cmd_simulate(const ResolvedConfig& cfg, std::ostream& diag) {
    if (cfg.tier == dynamics::ModelTier::full && cfg.params.separation_warning()) {
        diag << "note: omega0 < 50*max(g, kappa, |delta|); "
                "scale separation for the full model is marginal\n";
    }
    const auto traj = run_tier(cfg);
    std::string body = header_block(cfg);
    body += "t,rho_ee,p_g1,p_g0,trace\n";
    for (const auto& s : traj.samples) {
        body += format_double(s.t);
        body += ',';
        body += format_double(s.rho_ee);
        body += ',';
        body += format_double(s.p_g1);
        body += ',';
        body += format_double(s.p_g0);
        body += ',';
        body += format_double(s.trace);
        body += '\n';
    }
    write_file(cfg.out, body);
}

void cmd_sweep_eta(const ResolvedConfig& cfg, std::ostream&) {
    std::string body = header_block(cfg);
    body += "delta_over_kappa,efield,delta_e,eta\n";
    const double kappa = cfg.params.kappa;
    const double span = cfg.sweep_max - cfg.sweep_min;
    for (double field : cfg.sweep_fields) {
        double shift;
        if (cfg.stark_is_polarizability) {
            shift = (field == 0.0)
                        ? 0.0
                        : effective::StarkInput::polarizability_form(cfg.alpha0, field).shift();
        } else {
            shift = effective::StarkInput::frequency_form(field, cfg.params.omega_drive,
                                                          cfg.params.omega0)
                        .shift();
        }
        for (int i = 0; i < cfg.sweep_steps; ++i) {
            const double x = (cfg.sweep_steps == 1)
                                 ? cfg.sweep_min
                                 : cfg.sweep_min + span * static_cast<double>(i) /
                                                       static_cast<double>(cfg.sweep_steps - 1);
            const double delta = x * kappa;
            const double delta_e = delta + shift;
            body += format_double(x);
            body += ',';
            body += format_double(field);
            body += ',';
            body += format_double(delta_e);
            body += ',';
            body += format_double(effective::eta(kappa, delta, delta_e));
            body += '\n';
        }
    }
    write_file(cfg.out, body);
}

void cmd_compare(const ResolvedConfig& cfg, std::ostream& out_stream, std::ostream& diag) {
    if (cfg.params.separation_warning()) {
        diag << "note: omega0 < 50*max(g, kappa, |delta|); "
                "scale separation for the full model is marginal\n";
    }
    const auto cmp = dynamics::compare_tiers(cfg.params, cfg.t_max, cfg.dt, cfg.sample_every);
    std::string body = header_block(cfg);
    body += "t,rho_ee_full,rho_ee_averaged,rho_ee_adiabatic,"
            "dev_full_averaged,dev_averaged_adiabatic\n";
    for (std::size_t i = 0; i < cmp.full.samples.size(); ++i) {
        const double rf = cmp.full.samples[i].rho_ee;
        const double ra = cmp.averaged.samples[i].rho_ee;
        const double rad = cmp.adiabatic_rho_ee[i];
        body += format_double(cmp.full.samples[i].t);
        body += ',';
        body += format_double(rf);
        body += ',';
        body += format_double(ra);
        body += ',';
        body += format_double(rad);
        body += ',';
        body += format_double(std::abs(rf - ra));
        body += ',';
        body += format_double(std::abs(ra - rad));
        body += '\n';
    }
    write_file(cfg.out, body);
    out_stream << "max|full-averaged| = " << format_double(cmp.max_full_vs_averaged)
               << "  max|averaged-adiabatic| = "
               << format_double(cmp.max_averaged_vs_adiabatic) << '\n';
}

void cmd_estimate(const ResolvedConfig& cfg, std::ostream& out_stream) {
    const auto est = effective::significance_estimate(cfg.params.kappa, cfg.params.omega0,
                                                      cfg.dipole, cfg.alpha0_estimate);
    std::string body = "# starkcav estimate (inputs in Hz)\n";
    body += "efield = " + format_double(est.efield_hz) + "\n";
    if (est.efield_dc_esu_from_dipole) {
        body += "efield_dc_from_dipole = " + format_double(*est.efield_dc_esu_from_dipole) +
                "\n";
    }
    if (est.efield_dc_esu_from_alpha0) {
        body += "efield_dc_from_alpha0 = " + format_double(*est.efield_dc_esu_from_alpha0) +
                "\n";
    }
    body += std::string("note = ") + effective::SignificanceEstimate::assumption + "\n";
    out_stream << body;
    if (!cfg.out.empty()) write_file(cfg.out, body);
}

int run(const RunConfig& rc, const std::string& dump_path,
        std::ostream& out_stream, std::ostream& diag) {
    try {
        const ResolvedConfig cfg = resolve(rc);
        if (!dump_path.empty()) write_file(dump_path, dump_config(cfg));
        switch (cfg.command) {
            case Command::simulate: cmd_simulate(cfg, diag); break;
            case Command::sweep_eta: cmd_sweep_eta(cfg, diag); break;
            case Command::compare: cmd_compare(cfg, out_stream, diag); break;
            case Command::estimate: cmd_estimate(cfg, out_stream); break;
        }
        return 0;
    } catch (const dynamics::invariant_violation& e) {
        diag << "error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        diag << "error: " << e.what() << '\n';
        return 2;
    }
}

}  // namespace starkcav::cli
