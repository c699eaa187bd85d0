// dynamics.hpp — Master-equation right-hand sides (full time-dependent model
// and its time-averaged form) and fixed-step RK4 time integration.
//
// The rotating-frame generators, with X = aS⁺ + S⁻a† and N = a†a:
//
//   averaged:  dρ/dt = i[Δe N, ρ] - i g[X, ρ] - κ(Nρ - 2aρa† + ρN)
//   full:      dρ/dt = -i[H_a + H_d(t), ρ] - κ(Nρ - 2aρa† + ρN)
//              H_a    = -Δ N + g X
//              H_d(t) = (ℰ/2) S⁺ (e^{i(ω₀+Ω)t} + e^{i(ω₀-Ω)t}) + h.c.
//
// The full model carries the bare detuning only — the Stark shift must emerge
// from the drive; the averaged model takes Δe from module `effective`.
//
// Integration of one trajectory is strictly sequential; distinct trajectories
// are embarrassingly parallel over shared read-only OperatorSet values.

#pragma once

#include "starkcav/hilbert.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace starkcav::dynamics {

// thrown when a trajectory breaches a numerical invariant beyond the abort
// tolerance; the CLI maps it to exit code 3
struct invariant_violation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class ModelTier { full, averaged, adiabatic };

// ------------------------------ Parameters ----------------------------------

struct SystemParams {
    double g = 1.0;            // atom-cavity coupling
    double kappa = 0.0;        // cavity half-linewidth (photon loss rate 2κ)
    double delta = 0.0;        // bare detuning Δ = ω₀ - ω_c
    double efield = 0.0;       // drive amplitude ℰ
    double omega_drive = 0.0;  // drive frequency Ω
    double omega0 = 100.0;     // atomic transition frequency ω₀
    int n_max = 1;             // Fock truncation

    // throws on invariant violations (g > 0, κ ≥ 0, ω₀ > 0, ℰ ≥ 0,
    // 0 ≤ Ω < ω₀, n_max ≥ 1)
    void validate() const;

    // advisory scale-separation flag for full-model runs:
    // set when ω₀ < 50·max(g, κ, |Δ|)
    bool separation_warning() const;

    // full-tier step-size precondition: dt ≤ (2π/(ω₀+Ω))/50
    double full_step_bound() const;

    // Δe from the frequency-form Stark input carried by these parameters
    double averaged_delta_e() const;
};

// ------------------------------ Trajectory ----------------------------------

struct TrajectorySample {
    double t = 0.0;
    double rho_ee = 0.0;           // ⟨e,0|ρ|e,0⟩
    double p_excited_atom = 0.0;   // tr(ρ S⁺S⁻)
    double p_g1 = 0.0;
    double p_g0 = 0.0;
    double trace = 0.0;
    double herm_error = 0.0;       // max|ρ-ρ†| before symmetrization
    std::optional<double> min_eigenvalue;
};

struct Trajectory {
    std::vector<double> times;
    std::vector<TrajectorySample> samples;
    bool separation_warning = false;

    double max_trace_error() const;
    double max_herm_error() const;
    double min_eigenvalue() const;   // smallest recorded; +inf if not recorded
};

struct IntegrateOptions {
    bool record_eigenvalues = true;
    bool check_invariants = true;    // abort when a breach exceeds abort_tol
    double abort_tol = 1e-6;
};

// --------------------------- Right-hand sides --------------------------------

// dρ/dt of the averaged model; output is trace-free to ~1e-13.
Matrix rhs_averaged(const Matrix& rho, const hilbert::OperatorSet& ops,
                    double g, double kappa, double delta_e);
Matrix rhs_averaged(const Matrix& rho, const SystemParams& p, double delta_e);

// dρ/dt of the full model at time t; reduces to the averaged rhs at
// Δe = Δ, element-exactly, when ℰ = 0.
Matrix rhs_full(const Matrix& rho, double t, const hilbert::OperatorSet& ops,
                const SystemParams& p);
Matrix rhs_full(const Matrix& rho, double t, const SystemParams& p);

// ------------------------------ Integration ---------------------------------

// Classic fixed-step fourth-order Runge-Kutta.  Every emitted sample is
// re-validated: the Hermiticity defect is measured and then symmetrized away,
// the trace drift is recorded but never renormalized.  rho0 must satisfy the
// DensityMatrix invariants and match the dimension implied by p.n_max.
//
// FULL tier: enforces the fast-oscillation step bound (std::invalid_argument).
// AVERAGED tier: Δe is taken from p via averaged_delta_e().
// ADIABATIC tier: closed-form atomic solution exp(-2Γe t) on the same grid.
Trajectory integrate(const hilbert::DensityMatrix& rho0, ModelTier tier,
                     const SystemParams& p, double t_max, double dt,
                     int sample_every, const IntegrateOptions& opts = {});

// Averaged-model workhorse with an explicit Δe (used by the CLI when the
// Stark input is given in polarizability form).
Trajectory integrate_averaged(const hilbert::DensityMatrix& rho0,
                              const SystemParams& p, double delta_e,
                              double t_max, double dt, int sample_every,
                              const IntegrateOptions& opts = {});

// Closed-form adiabatic trajectory at rates(g, κ, Δe).
Trajectory adiabatic_trajectory(const SystemParams& p, double delta_e,
                                double t_max, double dt, int sample_every);

// ---------------------------- Tier comparison --------------------------------

struct TierComparison {
    Trajectory full;        // at p.n_max
    Trajectory averaged;    // at n_max = 1, Δe from module `effective`
    std::vector<double> adiabatic_rho_ee;
    double max_full_vs_averaged = 0.0;
    double max_averaged_vs_adiabatic = 0.0;
};

// Runs all three tiers on a common sample grid and reports pointwise maximum
// ρ_ee deviations.  dt must satisfy the full-tier step bound.
TierComparison compare_tiers(const SystemParams& p, double t_max, double dt,
                             int sample_every = 1);

}  // namespace starkcav::dynamics
