// acceptance.cpp — end-to-end acceptance suite; prints one pass/fail line per
// criterion and exits nonzero when any criterion fails.

#include "starkcav/commands.hpp"
#include "starkcav/dynamics.hpp"
#include "starkcav/effective.hpp"
#include "starkcav/format.hpp"
#include "starkcav/timeavg.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

using namespace starkcav;
using dynamics::ModelTier;
using dynamics::SystemParams;
using hilbert::Atom;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

hilbert::DensityMatrix excited_vacuum(int n_max) {
    return hilbert::pure_state(Atom::excited, 0, hilbert::SpaceSpec{n_max});
}

dynamics::Trajectory averaged_run(double g, double kappa, double delta_e, double t_max,
                                  double dt, int sample_every) {
    SystemParams p;
    p.g = g;
    p.kappa = kappa;
    p.delta = delta_e;   // shift folded into the bare detuning
    p.omega0 = 1e6;
    p.n_max = 1;
    return dynamics::integrate_averaged(excited_vacuum(1), p, delta_e, t_max, dt,
                                        sample_every);
}

// 1. resonant Purcell rate: rates(g, kappa, 0).gamma = g^2/kappa at machine precision
Outcome criterion_resonant_rate() {
    Outcome out;
    std::ostringstream detail;
    for (auto [g, kappa] : {std::pair{1.0, 1.0}, std::pair{0.7, 2.3}, std::pair{2.0, 5.0},
                            std::pair{0.3, 0.1}}) {
        const auto r = effective::rates(g, kappa, 0.0);
        const double expect = g * g / kappa;
        const double rel = std::abs(r.gamma - expect) / expect;
        if (rel > 4e-16 || r.shift != 0.0) {
            out.pass = false;
            detail << " g=" << g << " kappa=" << kappa << " rel=" << rel;
        }
    }
    out.detail = out.pass ? "gamma = g^2/kappa at resonance for all probed (g, kappa)"
                          : "mismatch:" + detail.str();
    return out;
}

// 2. decay-ratio sweep: eta = 1 without field, inhibition for delta > 0,
//    enhancement iff delta < -shift/2, crossing at -shift/2 to 1e-12 relative
Outcome criterion_eta_sweep() {
    Outcome out;
    std::ostringstream detail;
    const double kappa = 1.0;
    const double omega0 = 3.4e5 * kappa;
    const int n_grid = 1601;

    const auto grid_delta = [&](int i) {
        return kappa * (-40.0 + 80.0 * static_cast<double>(i) /
                                    static_cast<double>(n_grid - 1));
    };

    // (a) no field
    for (int i = 0; i < n_grid; ++i) {
        const double d = grid_delta(i);
        if (effective::eta(kappa, d, d) != 1.0) {
            out.pass = false;
            detail << " eta!=1 at delta=" << d;
            break;
        }
    }
    // (b), (c) for two field strengths (shifts kappa and 2*kappa)
    for (const double efield :
         {std::sqrt(kappa * omega0 / 2.0), std::sqrt(kappa * omega0)}) {
        const double s =
            effective::StarkInput::frequency_form(efield, 0.0, omega0).shift();
        for (int i = 0; i < n_grid; ++i) {
            const double d = grid_delta(i);
            const double e = effective::eta(kappa, d, d + s);
            if (d > 0.0 && !(e < 1.0)) {
                out.pass = false;
                detail << " no inhibition at delta=" << d;
            }
            if (std::abs(2.0 * d + s) > 1e-12 * kappa &&
                (e > 1.0) != (d < -s / 2.0)) {
                out.pass = false;
                detail << " enhancement condition violated at delta=" << d;
            }
        }
        // crossing by bisection on [-s, 0]
        double lo = -s, hi = 0.0;
        for (int it = 0; it < 200; ++it) {
            const double mid = 0.5 * (lo + hi);
            (effective::eta(kappa, mid, mid + s) > 1.0 ? lo : hi) = mid;
        }
        const double crossing = 0.5 * (lo + hi);
        const double rel = std::abs(crossing + s / 2.0) / (s / 2.0);
        if (rel > 1e-12) {
            out.pass = false;
            detail << " crossing off by rel " << rel;
        }
    }
    out.detail = out.pass ? "eta map and the -shift/2 crossing verified on 1601x3 grid"
                          : detail.str();
    return out;
}

// 3. inhibition family: larger stark shift gives pointwise slower decay
Outcome criterion_inhibition_family() {
    Outcome out;
    const std::vector<double> shifts = {0.0, 2.5, 5.0, 10.0};
    std::vector<dynamics::Trajectory> runs;
    for (double de : shifts) runs.push_back(averaged_run(1.0, 5.0, de, 10.0, 1e-3, 5));
    double worst = 0.0;
    for (std::size_t k = 1; k < runs.size(); ++k) {
        for (std::size_t i = 0; i < runs[k].samples.size(); ++i) {
            worst = std::max(worst, runs[k - 1].samples[i].rho_ee -
                                        runs[k].samples[i].rho_ee);
        }
    }
    out.pass = worst <= 1e-6;
    out.detail = "max ordering violation " + format_double(worst) + " (tolerance 1e-6)";
    return out;
}

// 4. averaged integrator vs the damped-rabi closed form
Outcome criterion_oracle_equivalence() {
    Outcome out;
    double worst = 0.0;
    for (const double kappa : {0.5, 1.0, 5.0}) {
        for (const double ratio : {0.0, 1.0, 5.0}) {
            const double delta_e = ratio * kappa;
            const double scale = std::max({1.0, 2.0 * kappa, std::abs(delta_e)});
            const double dt = 1e-3 / scale;
            const long steps = static_cast<long>(std::ceil(10.0 / dt));
            const int se = static_cast<int>(std::max(1L, steps / 2000));
            const auto traj = averaged_run(1.0, kappa, delta_e, 10.0, dt, se);
            for (const auto& s : traj.samples) {
                worst = std::max(worst,
                                 std::abs(s.rho_ee - effective::damped_rabi_population(
                                                         1.0, kappa, delta_e, s.t)));
            }
        }
    }
    out.pass = worst <= 1e-8;
    out.detail = "max |integrator - closed form| = " + format_double(worst) +
                 " over 9 parameter sets (tolerance 1e-8)";
    return out;
}

// 5. bad-cavity limit against exp(-2 g^2 t / kappa)
Outcome criterion_bad_cavity() {
    Outcome out;
    const auto max_dev = [](double kappa, double dt) {
        const double t_max = 3.0 * kappa;
        const long steps = static_cast<long>(std::ceil(t_max / dt));
        const int se = static_cast<int>(std::max(1L, steps / 4000));
        const auto traj = averaged_run(1.0, kappa, 0.0, t_max, dt, se);
        double worst = 0.0;
        for (const auto& s : traj.samples) {
            worst = std::max(worst,
                             std::abs(s.rho_ee - std::exp(-2.0 * s.t / kappa)));
        }
        return worst;
    };
    const double dev5 = max_dev(5.0, 1e-3);
    const double dev20 = max_dev(20.0, 2.5e-4);
    const bool within = dev5 < 0.05;
    const bool shrinks = dev5 / dev20 >= 10.0;
    out.pass = within && shrinks;
    out.detail = "max dev kappa=5g: " + format_double(dev5) +
                 " (bound 0.05); kappa=20g: " + format_double(dev20) +
                 " (shrink factor " + format_double(dev5 / dev20) + ", need >= 10)";
    return out;
}

// 6. stark-shift emergence: full model vs averaged model at the predicted delta_e
Outcome criterion_stark_emergence() {
    Outcome out;
    const auto deviation = [](double omega0) {
        SystemParams p;
        p.g = 1.0;
        p.kappa = 1.0;
        p.delta = 0.0;
        p.efield = 2.0;
        p.omega_drive = 0.0;
        p.omega0 = omega0;
        p.n_max = 3;
        const double dt = (2.0 * std::numbers::pi / omega0) / 64.0;
        const long steps = static_cast<long>(std::ceil(5.0 / dt));
        const int se = static_cast<int>(std::max(1L, steps / 2000));
        const auto full =
            dynamics::integrate(excited_vacuum(3), ModelTier::full, p, 5.0, dt, se);
        const double delta_e = p.averaged_delta_e();
        const auto avg = averaged_run(1.0, 1.0, delta_e, 5.0, dt, se);
        double worst = 0.0;
        const std::size_t n = std::min(full.samples.size(), avg.samples.size());
        for (std::size_t i = 0; i < n; ++i) {
            worst = std::max(worst, std::abs(full.samples[i].rho_ee -
                                             avg.samples[i].rho_ee));
        }
        return worst;
    };
    const double dev200 = deviation(200.0);
    const double dev400 = deviation(400.0);
    out.pass = dev200 < 0.02 && dev400 < dev200;
    out.detail = "max dev omega0=200g: " + format_double(dev200) +
                 " (bound 0.02); omega0=400g: " + format_double(dev400) +
                 " (must shrink)";
    return out;
}

// 7. appendix oracle: analytic secular shift and its numeric average
Outcome criterion_appendix_oracle() {
    Outcome out;
    std::ostringstream detail;
    const double efield = 0.3, omega0 = 50.0;
    const auto terms = timeavg::drive_terms(efield, omega0, 0.0);
    const Matrix analytic = timeavg::effective_hamiltonian(terms, 0.0);
    const double shift = timeavg::atomic_splitting_shift(analytic);
    const double expected =
        effective::StarkInput::frequency_form(efield, 0.0, omega0).shift();
    const double rel_shift = std::abs(shift - expected) / expected;

    const Matrix numeric = timeavg::numeric_average_check(terms, 100, 200);
    const double rel_numeric = (numeric - analytic).cwiseAbs().maxCoeff() /
                               analytic.cwiseAbs().maxCoeff();
    out.pass = rel_shift <= 1e-12 && rel_numeric <= 1e-4;
    out.detail = "shift rel err " + format_double(rel_shift) +
                 " (bound 1e-12); numeric-average rel dev " + format_double(rel_numeric) +
                 " (bound 1e-4)";
    return out;
}

// 8. Na Rydberg estimate through the CLI command
Outcome criterion_estimate() {
    Outcome out;
    cli::RunConfig rc;
    rc.command = "estimate";
    rc.kappa = 1e6;
    rc.omega0 = 3.4e11;
    rc.dipole = 1e-15;
    std::ostringstream text, err;
    if (cli::run(rc, "", text, err) != 0) {
        out.pass = false;
        out.detail = "cmd_estimate failed: " + err.str();
        return out;
    }
    const auto value_of = [&](const std::string& key) {
        const std::string tag = key + " = ";
        const auto pos = text.str().find(tag);
        if (pos == std::string::npos) return std::nan("");
        const auto eol = text.str().find('\n', pos);
        return parse_double(text.str().substr(pos + tag.size(), eol - pos - tag.size()));
    };
    const double efield = value_of("efield");
    const double efield_dc = value_of("efield_dc_from_dipole");
    const bool efield_ok = std::abs(efield - 4.1e8) / 4.1e8 < 0.05;
    const bool field_ok = efield_dc >= 0.3e-2 && efield_dc <= 3e-2;
    out.pass = efield_ok && field_ok;
    out.detail = "efield = " + format_double(efield) +
                 " Hz (need within 5% of 4.1e8: " + (efield_ok ? "yes" : "NO") +
                 "); efield_dc = " + format_double(efield_dc) +
                 " esu (need in [3e-3, 3e-2]: " + (field_ok ? "yes" : "NO") + ")";
    return out;
}

// 9. numerical hygiene on randomized parameter sets + RK4 refinement order
Outcome criterion_hygiene() {
    Outcome out;
    std::ostringstream detail;
    std::mt19937 rng(2024);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    std::uniform_int_distribution<int> pick_nmax(1, 3);

    double worst_trace = 0.0, worst_herm = 0.0, best_eig = 0.0;
    double slope_lo = 10.0, slope_hi = 0.0;
    for (int set = 0; set < 50; ++set) {
        const double g = 0.5 + 1.5 * uni(rng);
        const double kappa = (0.2 + 2.8 * uni(rng)) * g;
        const double delta = 6.0 * (uni(rng) - 0.5) * g;
        const double shift = 5.0 * uni(rng) * g;
        const double delta_e = delta + (uni(rng) < 0.5 ? shift : -shift);
        const int n_max = pick_nmax(rng);

        SystemParams p;
        p.g = g;
        p.kappa = kappa;
        p.delta = delta_e;
        p.omega0 = 1e6;
        p.n_max = n_max;

        const double scale =
            std::max({g, std::abs(delta_e), kappa * (2.0 * n_max + 1.0)});
        const double t_max = 2.5 / g;
        const double dt = 2.5e-3 / scale;
        const long steps = static_cast<long>(std::ceil(t_max / dt));
        const int se = static_cast<int>(std::max(1L, steps / 500));
        const auto traj = dynamics::integrate_averaged(excited_vacuum(n_max), p, delta_e,
                                                       t_max, dt, se);
        worst_trace = std::max(worst_trace, traj.max_trace_error());
        worst_herm = std::max(worst_herm, traj.max_herm_error());
        best_eig = std::min(best_eig, traj.min_eigenvalue());

        // refinement study at t = 1.2/g on a 50-sample common grid
        const double t_ref = 1.2 / g;
        const double dt0 = 0.1 / scale;
        const long blocks = std::max(1L, static_cast<long>(std::ceil(
                                             t_ref / (50.0 * dt0))));
        const long n0 = 50 * blocks;
        const dynamics::IntegrateOptions loose{false, false, 1e-6};
        std::vector<std::vector<double>> curves;
        for (int level = 0; level < 4; ++level) {
            const long n = n0 << level;
            const auto t = dynamics::integrate_averaged(
                excited_vacuum(n_max), p, delta_e, t_ref,
                t_ref / static_cast<double>(n), static_cast<int>(n / 50), loose);
            std::vector<double> curve;
            for (const auto& s : t.samples) curve.push_back(s.rho_ee);
            curves.push_back(curve);
        }
        double e0 = 0.0, e1 = 0.0, e2 = 0.0;
        for (std::size_t i = 0; i < curves[3].size(); ++i) {
            e0 = std::max(e0, std::abs(curves[0][i] - curves[3][i]));
            e1 = std::max(e1, std::abs(curves[1][i] - curves[3][i]));
            e2 = std::max(e2, std::abs(curves[2][i] - curves[3][i]));
        }
        if (e2 < 1e-13) continue;   // below measurable refinement signal
        const double slope = 0.5 * (std::log2(e0 / e1) + std::log2(e1 / e2));
        slope_lo = std::min(slope_lo, slope);
        slope_hi = std::max(slope_hi, slope);
        if (slope < 3.5 || slope > 4.5) {
            out.pass = false;
            detail << " slope " << slope << " at set " << set;
        }
    }
    if (worst_trace >= 1e-8 || worst_herm >= 1e-10 || best_eig <= -1e-7) {
        out.pass = false;
    }
    out.detail = "trace err " + format_double(worst_trace) + " (<1e-8), herm err " +
                 format_double(worst_herm) + " (<1e-10), min eig " +
                 format_double(best_eig) + " (>-1e-7), slopes in [" +
                 format_double(slope_lo) + ", " + format_double(slope_hi) +
                 "] (need 4 +- 0.5)" + detail.str();
    return out;
}

}  // namespace

int main() {
    struct Entry {
        const char* name;
        std::function<Outcome()> fn;
    };
    const std::vector<Entry> criteria = {
        {"resonant Purcell rate", criterion_resonant_rate},
        {"decay-ratio sweep properties", criterion_eta_sweep},
        {"inhibition ordering of the trajectory family", criterion_inhibition_family},
        {"cross-tier oracle equivalence", criterion_oracle_equivalence},
        {"bad-cavity limit", criterion_bad_cavity},
        {"stark-shift emergence in the full model", criterion_stark_emergence},
        {"time-averaging oracle", criterion_appendix_oracle},
        {"Na Rydberg estimate", criterion_estimate},
        {"numerical hygiene and RK4 order", criterion_hygiene},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = criteria[i].fn();
        } catch (const std::exception& e) {
            out.pass = false;
            out.detail = std::string("exception: ") + e.what();
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                .count();
        std::cout << (out.pass ? "[PASS] " : "[FAIL] ") << (i + 1) << ". "
                  << criteria[i].name << " — " << out.detail << " ["
                  << format_double(std::round(secs * 100.0) / 100.0) << " s]\n";
        if (!out.pass) ++failures;
    }
    std::cout << (criteria.size() - failures) << "/" << criteria.size()
              << " acceptance criteria passed\n";
    return failures == 0 ? 0 : 1;
}
