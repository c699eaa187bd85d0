// starkcav — dc-field-controlled spontaneous emission of a two-level atom in
// a damped single-mode cavity: trajectory runs, decay-ratio sweeps, tier
// comparisons, and the significance-threshold estimator.

#include "starkcav/commands.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <string>
#include <vector>

int main(int argc, char** argv) {
    CLI::App app{
        "starkcav: spontaneous emission in a damped cavity under a dc/low-frequency drive\n"
        "commands: simulate | sweep-eta | compare | estimate"};
    app.get_formatter()->column_width(26);

    std::string command, tier, unit, out, config_path, dump_path;
    double g, kappa, delta, efield, omega, omega0, alpha0, efield_dc, dipole;
    double tmax, dt, sweep_min, sweep_max;
    int nmax, sample_every, sweep_steps;
    std::vector<double> sweep_fields;

    auto* o_command = app.add_option("command", command,
                                     "simulate | sweep-eta | compare | estimate");
    auto* o_g = app.add_option("--g", g, "atom-cavity coupling g");
    auto* o_kappa = app.add_option("--kappa", kappa, "cavity half-linewidth kappa");
    auto* o_delta = app.add_option("--delta", delta, "bare detuning delta = omega0 - omega_c");
    auto* o_efield = app.add_option("--efield", efield, "drive amplitude (frequency form)");
    auto* o_omega = app.add_option("--omega", omega, "drive frequency Omega");
    auto* o_omega0 = app.add_option("--omega0", omega0, "atomic transition frequency omega0");
    auto* o_alpha0 = app.add_option("--alpha0", alpha0,
                                    "differential polarizability (frequency per field^2)");
    auto* o_efield_dc = app.add_option("--efield-dc", efield_dc, "dc field in esu");
    auto* o_dipole = app.add_option("--dipole", dipole, "transition dipole in esu (estimate)");
    auto* o_tier = app.add_option("--tier", tier, "full | averaged | adiabatic");
    auto* o_nmax = app.add_option("--nmax", nmax, "Fock truncation n_max");
    auto* o_tmax = app.add_option("--tmax", tmax, "integration time");
    auto* o_dt = app.add_option("--dt", dt, "integrator step");
    auto* o_sample = app.add_option("--sample-every", sample_every, "sampling stride in steps");
    auto* o_out = app.add_option("--out", out, "output file path");
    auto* o_unit = app.add_option("--unit", unit, "frequency unit label echoed to CSV header");
    auto* o_smin = app.add_option("--sweep-min", sweep_min, "sweep grid lower delta/kappa");
    auto* o_smax = app.add_option("--sweep-max", sweep_max, "sweep grid upper delta/kappa");
    auto* o_ssteps = app.add_option("--sweep-steps", sweep_steps, "sweep grid point count");
    auto* o_sfields = app.add_option("--sweep-fields", sweep_fields,
                                     "comma-separated field values for the sweep")
                          ->delimiter(',');
    app.add_option("--config", config_path, "plain key = value config file (flags win)");
    app.add_option("--dump-config", dump_path, "write the effective config to this path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);   // --help
        app.exit(e);
        return 2;
    }

    starkcav::cli::RunConfig rc;
    if (o_command->count()) rc.command = command;
    if (o_g->count()) rc.g = g;
    if (o_kappa->count()) rc.kappa = kappa;
    if (o_delta->count()) rc.delta = delta;
    if (o_efield->count()) rc.efield = efield;
    if (o_omega->count()) rc.omega_drive = omega;
    if (o_omega0->count()) rc.omega0 = omega0;
    if (o_alpha0->count()) rc.alpha0 = alpha0;
    if (o_efield_dc->count()) rc.efield_dc = efield_dc;
    if (o_dipole->count()) rc.dipole = dipole;
    if (o_tier->count()) rc.tier = tier;
    if (o_nmax->count()) rc.n_max = nmax;
    if (o_tmax->count()) rc.t_max = tmax;
    if (o_dt->count()) rc.dt = dt;
    if (o_sample->count()) rc.sample_every = sample_every;
    if (o_out->count()) rc.out = out;
    if (o_unit->count()) rc.unit = unit;
    if (o_smin->count()) rc.sweep_min = sweep_min;
    if (o_smax->count()) rc.sweep_max = sweep_max;
    if (o_ssteps->count()) rc.sweep_steps = sweep_steps;
    if (o_sfields->count()) rc.sweep_fields = sweep_fields;

    if (!config_path.empty()) {
        try {
            starkcav::cli::fill_missing(rc, starkcav::cli::parse_config_file(config_path));
        } catch (const std::exception& e) {
            std::cerr << "error: " << e.what() << '\n';
            return 2;
        }
    }
    return starkcav::cli::run(rc, dump_path, std::cout, std::cerr);
}
