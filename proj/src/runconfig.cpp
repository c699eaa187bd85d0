#include "starkcav/runconfig.hpp"

#include "starkcav/effective.hpp"
#include "starkcav/format.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace starkcav::cli {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

int parse_int(const std::string& text) {
    int v = 0;
    const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
    if (res.ec != std::errc{} || res.ptr != text.data() + text.size()) {
        throw std::invalid_argument("config: bad integer '" + text + "'");
    }
    return v;
}

std::vector<double> parse_double_list(const std::string& text) {
    std::vector<double> vals;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        vals.push_back(parse_double(trim(item)));
    }
    if (vals.empty()) throw std::invalid_argument("config: empty list");
    return vals;
}

std::string join_doubles(const std::vector<double>& vals) {
    std::string s;
    for (std::size_t i = 0; i < vals.size(); ++i) {
        if (i) s += ',';
        s += format_double(vals[i]);
    }
    return s;
}

}  // namespace

const char* command_name(Command c) {
    switch (c) {
        case Command::simulate: return "simulate";
        case Command::sweep_eta: return "sweep-eta";
        case Command::compare: return "compare";
        case Command::estimate: return "estimate";
    }
    return "?";
}

const char* tier_name(dynamics::ModelTier t) {
    switch (t) {
        case dynamics::ModelTier::full: return "full";
        case dynamics::ModelTier::averaged: return "averaged";
        case dynamics::ModelTier::adiabatic: return "adiabatic";
    }
    return "?";
}

RunConfig parse_config_text(const std::string& text) {
    RunConfig rc;
    std::stringstream ss(text);
    std::string line;
    int lineno = 0;
    while (std::getline(ss, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw std::invalid_argument("config line " + std::to_string(lineno) +
                                        ": expected 'key = value'");
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string val = trim(line.substr(eq + 1));
        if (key.empty() || val.empty()) {
            throw std::invalid_argument("config line " + std::to_string(lineno) +
                                        ": empty key or value");
        }
        if (key == "command") rc.command = val;
        else if (key == "g") rc.g = parse_double(val);
        else if (key == "kappa") rc.kappa = parse_double(val);
        else if (key == "delta") rc.delta = parse_double(val);
        else if (key == "efield") rc.efield = parse_double(val);
        else if (key == "omega") rc.omega_drive = parse_double(val);
        else if (key == "omega0") rc.omega0 = parse_double(val);
        else if (key == "alpha0") rc.alpha0 = parse_double(val);
        else if (key == "efield-dc") rc.efield_dc = parse_double(val);
        else if (key == "dipole") rc.dipole = parse_double(val);
        else if (key == "tier") rc.tier = val;
        else if (key == "unit") rc.unit = val;
        else if (key == "out") rc.out = val;
        else if (key == "nmax") rc.n_max = parse_int(val);
        else if (key == "sample-every") rc.sample_every = parse_int(val);
        else if (key == "sweep-steps") rc.sweep_steps = parse_int(val);
        else if (key == "tmax") rc.t_max = parse_double(val);
        else if (key == "dt") rc.dt = parse_double(val);
        else if (key == "sweep-min") rc.sweep_min = parse_double(val);
        else if (key == "sweep-max") rc.sweep_max = parse_double(val);
        else if (key == "sweep-fields") rc.sweep_fields = parse_double_list(val);
        else {
            throw std::invalid_argument("config line " + std::to_string(lineno) +
                                        ": unknown key '" + key + "'");
        }
    }
    return rc;
}

RunConfig parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("config: cannot open '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_config_text(buf.str());
}

void fill_missing(RunConfig& dst, const RunConfig& src) {
    const auto take = [](auto& d, const auto& s) { if (!d && s) d = s; };
    take(dst.command, src.command);
    take(dst.g, src.g);
    take(dst.kappa, src.kappa);
    take(dst.delta, src.delta);
    take(dst.efield, src.efield);
    take(dst.omega_drive, src.omega_drive);
    take(dst.omega0, src.omega0);
    take(dst.alpha0, src.alpha0);
    take(dst.efield_dc, src.efield_dc);
    take(dst.dipole, src.dipole);
    take(dst.tier, src.tier);
    take(dst.unit, src.unit);
    take(dst.out, src.out);
    take(dst.n_max, src.n_max);
    take(dst.sample_every, src.sample_every);
    take(dst.sweep_steps, src.sweep_steps);
    take(dst.t_max, src.t_max);
    take(dst.dt, src.dt);
    take(dst.sweep_min, src.sweep_min);
    take(dst.sweep_max, src.sweep_max);
    take(dst.sweep_fields, src.sweep_fields);
}

namespace {

Command parse_command(const std::optional<std::string>& name) {
    if (!name) throw std::invalid_argument("config: no command given "
                                           "(simulate | sweep-eta | compare | estimate)");
    if (*name == "simulate") return Command::simulate;
    if (*name == "sweep-eta") return Command::sweep_eta;
    if (*name == "compare") return Command::compare;
    if (*name == "estimate") return Command::estimate;
    throw std::invalid_argument("config: unknown command '" + *name + "'");
}

dynamics::ModelTier parse_tier(const std::string& name) {
    if (name == "full") return dynamics::ModelTier::full;
    if (name == "averaged") return dynamics::ModelTier::averaged;
    if (name == "adiabatic") return dynamics::ModelTier::adiabatic;
    throw std::invalid_argument("config: unknown tier '" + name + "'");
}

long step_count(double t_max, double dt) {
    return static_cast<long>(std::ceil(t_max / dt - 1e-12));
}

// default step for averaged/adiabatic runs: resolve the fastest of the
// coherent scales and the dissipator's stiffest rate
double averaged_default_dt(const dynamics::SystemParams& p, double delta_e) {
    const double scale = std::max({p.g, std::abs(delta_e),
                                   p.kappa * (2.0 * p.n_max + 1.0), 1e-12});
    return 2.5e-3 / scale;
}

void resolve_stark(const RunConfig& rc, ResolvedConfig& cfg) {
    const bool has_pol = rc.alpha0.has_value() || rc.efield_dc.has_value();
    if (has_pol) {
        if (!rc.alpha0 || !rc.efield_dc) {
            throw std::invalid_argument("config: alpha0 and efield-dc must be given together");
        }
        if (cfg.params.efield != 0.0) {
            throw std::invalid_argument("config: give either efield (frequency form) or "
                                        "alpha0/efield-dc (polarizability form), not both");
        }
        cfg.stark_is_polarizability = true;
        cfg.alpha0 = *rc.alpha0;
        cfg.efield_dc = *rc.efield_dc;
        cfg.delta_e = effective::effective_detuning(
            cfg.params.delta,
            effective::StarkInput::polarizability_form(cfg.alpha0, cfg.efield_dc));
    } else {
        cfg.delta_e = cfg.params.averaged_delta_e();
    }
}

}  // namespace

ResolvedConfig resolve(const RunConfig& rc) {
    ResolvedConfig cfg;
    cfg.command = parse_command(rc.command);

    switch (cfg.command) {
        case Command::estimate: {
            if (!rc.kappa || !rc.omega0) {
                throw std::invalid_argument("estimate: kappa and omega0 are required (in Hz)");
            }
            cfg.params.kappa = *rc.kappa;
            cfg.params.omega0 = *rc.omega0;
            cfg.dipole = rc.dipole;
            cfg.alpha0_estimate = rc.alpha0;
            cfg.unit = rc.unit.value_or("Hz");
            cfg.out = rc.out.value_or("");
            return cfg;
        }
        case Command::sweep_eta: {
            cfg.params.kappa = rc.kappa.value_or(1.0);
            if (cfg.params.kappa <= 0.0) {
                throw std::invalid_argument("sweep-eta: kappa must be > 0");
            }
            cfg.params.omega_drive = rc.omega_drive.value_or(0.0);
            cfg.params.omega0 = rc.omega0.value_or(3.4e5 * cfg.params.kappa);
            cfg.sweep_min = rc.sweep_min.value_or(-40.0);
            cfg.sweep_max = rc.sweep_max.value_or(40.0);
            cfg.sweep_steps = rc.sweep_steps.value_or(161);
            if (cfg.sweep_steps < 1 || !(cfg.sweep_max >= cfg.sweep_min) ||
                !std::isfinite(cfg.sweep_min) || !std::isfinite(cfg.sweep_max)) {
                throw std::invalid_argument("sweep-eta: invalid delta/kappa grid");
            }
            if (rc.alpha0 && *rc.alpha0 <= 0.0) {
                throw std::invalid_argument("sweep-eta: alpha0 must be > 0");
            }
            cfg.stark_is_polarizability = rc.alpha0.has_value();
            cfg.alpha0 = rc.alpha0.value_or(0.0);
            if (rc.sweep_fields) {
                cfg.sweep_fields = *rc.sweep_fields;
            } else if (cfg.stark_is_polarizability) {
                // default dc fields giving stark shifts {0, kappa, 2*kappa}
                cfg.sweep_fields = {0.0, std::sqrt(cfg.params.kappa / cfg.alpha0),
                                    std::sqrt(2.0 * cfg.params.kappa / cfg.alpha0)};
            } else {
                const double w0 = cfg.params.omega0;
                cfg.sweep_fields = {0.0, std::sqrt(cfg.params.kappa * w0 / 2.0),
                                    std::sqrt(cfg.params.kappa * w0)};
            }
            for (double f : cfg.sweep_fields) {
                if (!std::isfinite(f) || f < 0.0) {
                    throw std::invalid_argument("sweep-eta: field values must be finite and >= 0");
                }
            }
            cfg.unit = rc.unit.value_or("kappa");
            cfg.out = rc.out.value_or("sweep_eta.csv");
            return cfg;
        }
        case Command::simulate:
        case Command::compare:
            break;
    }

    const bool is_compare = cfg.command == Command::compare;
    cfg.tier = is_compare ? dynamics::ModelTier::full
                          : parse_tier(rc.tier.value_or("averaged"));
    const bool full_model = is_compare || cfg.tier == dynamics::ModelTier::full;

    cfg.params.g = rc.g.value_or(1.0);
    cfg.params.kappa = rc.kappa.value_or(is_compare ? 1.0 : 5.0);
    cfg.params.delta = rc.delta.value_or(0.0);
    cfg.params.efield = rc.efield.value_or(is_compare ? 2.0 : 0.0);
    cfg.params.omega_drive = rc.omega_drive.value_or(0.0);
    cfg.params.omega0 = rc.omega0.value_or(full_model ? 200.0 * cfg.params.g
                                                      : 3.4e5 * cfg.params.kappa);
    cfg.params.n_max = rc.n_max.value_or(full_model ? 3 : 1);
    cfg.params.validate();

    resolve_stark(rc, cfg);
    if (full_model && cfg.stark_is_polarizability) {
        throw std::invalid_argument("config: the full tier drives the atom directly and "
                                    "requires the frequency-form input (efield/omega/omega0)");
    }

    cfg.t_max = rc.t_max.value_or(is_compare
                                      ? 5.0 / cfg.params.g
                                      : 3.0 * cfg.params.kappa / (cfg.params.g * cfg.params.g));
    cfg.dt = rc.dt.value_or(full_model ? cfg.params.full_step_bound() * (50.0 / 64.0)
                                       : averaged_default_dt(cfg.params, cfg.delta_e));
    if (!(cfg.t_max > 0.0) || !(cfg.dt > 0.0)) {
        throw std::invalid_argument("config: tmax and dt must be > 0");
    }
    cfg.sample_every =
        rc.sample_every.value_or(std::max(1L, step_count(cfg.t_max, cfg.dt) / 2000));
    if (cfg.sample_every < 1) {
        throw std::invalid_argument("config: sample-every must be >= 1");
    }
    cfg.unit = rc.unit.value_or("g");
    cfg.out = rc.out.value_or(is_compare ? "compare.csv" : "simulate.csv");
    return cfg;
}

std::string dump_config(const ResolvedConfig& cfg) {
    std::string s;
    const auto put = [&s](const char* key, const std::string& val) {
        s += key;
        s += " = ";
        s += val;
        s += '\n';
    };
    const auto putd = [&](const char* key, double v) { put(key, format_double(v)); };

    put("command", command_name(cfg.command));
    put("unit", cfg.unit);
    switch (cfg.command) {
        case Command::estimate:
            putd("kappa", cfg.params.kappa);
            putd("omega0", cfg.params.omega0);
            if (cfg.dipole) putd("dipole", *cfg.dipole);
            if (cfg.alpha0_estimate) putd("alpha0", *cfg.alpha0_estimate);
            break;
        case Command::sweep_eta:
            putd("kappa", cfg.params.kappa);
            if (cfg.stark_is_polarizability) {
                putd("alpha0", cfg.alpha0);
            } else {
                putd("omega", cfg.params.omega_drive);
                putd("omega0", cfg.params.omega0);
            }
            putd("sweep-min", cfg.sweep_min);
            putd("sweep-max", cfg.sweep_max);
            put("sweep-steps", std::to_string(cfg.sweep_steps));
            put("sweep-fields", join_doubles(cfg.sweep_fields));
            break;
        case Command::simulate:
        case Command::compare:
            if (cfg.command == Command::simulate) put("tier", tier_name(cfg.tier));
            putd("g", cfg.params.g);
            putd("kappa", cfg.params.kappa);
            putd("delta", cfg.params.delta);
            if (cfg.stark_is_polarizability) {
                putd("alpha0", cfg.alpha0);
                putd("efield-dc", cfg.efield_dc);
            } else {
                putd("efield", cfg.params.efield);
                putd("omega", cfg.params.omega_drive);
                putd("omega0", cfg.params.omega0);
            }
            put("nmax", std::to_string(cfg.params.n_max));
            putd("tmax", cfg.t_max);
            putd("dt", cfg.dt);
            put("sample-every", std::to_string(cfg.sample_every));
            break;
    }
    if (!cfg.out.empty()) put("out", cfg.out);
    return s;
}

}  // namespace starkcav::cli
