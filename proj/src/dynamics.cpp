#include "starkcav/dynamics.hpp"

#include "starkcav/effective.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace starkcav::dynamics {

void SystemParams::validate() const {
    // g = 0 is admitted as the decoupled-atom oracle case
    if (g < 0.0) throw std::invalid_argument("SystemParams: g must be >= 0");
    if (kappa < 0.0) throw std::invalid_argument("SystemParams: kappa must be >= 0");
    if (omega0 <= 0.0) throw std::invalid_argument("SystemParams: omega0 must be > 0");
    if (efield < 0.0) throw std::invalid_argument("SystemParams: efield must be >= 0");
    if (omega_drive < 0.0 || omega_drive >= omega0) {
        throw std::invalid_argument("SystemParams: require 0 <= omega_drive < omega0");
    }
    hilbert::SpaceSpec{n_max}.validate();
}

bool SystemParams::separation_warning() const {
    return omega0 < 50.0 * std::max({g, kappa, std::abs(delta)});
}

double SystemParams::full_step_bound() const {
    return (2.0 * std::numbers::pi / (omega0 + omega_drive)) / 50.0;
}

double SystemParams::averaged_delta_e() const {
    return effective::effective_detuning(
        delta, effective::StarkInput::frequency_form(efield, omega_drive, omega0));
}

double Trajectory::max_trace_error() const {
    double m = 0.0;
    for (const auto& s : samples) m = std::max(m, std::abs(s.trace - 1.0));
    return m;
}

double Trajectory::max_herm_error() const {
    double m = 0.0;
    for (const auto& s : samples) m = std::max(m, s.herm_error);
    return m;
}

double Trajectory::min_eigenvalue() const {
    double m = std::numeric_limits<double>::infinity();
    for (const auto& s : samples) {
        if (s.min_eigenvalue) m = std::min(m, *s.min_eigenvalue);
    }
    return m;
}

// --------------------------- Generators --------------------------------------

namespace {

// Precomputed averaged-model generator.
struct AveragedGenerator {
    Matrix ham;    // -Δe N + g X
    Matrix a, a_dag, number;
    double kappa = 0.0;

    AveragedGenerator(const hilbert::OperatorSet& ops, double g, double kappa_, double delta_e)
        : a(ops.a), a_dag(ops.a_dag), number(ops.number), kappa(kappa_) {
        ham = -delta_e * ops.number + g * (ops.a * ops.s_plus + ops.s_minus * ops.a_dag);
    }

    Matrix operator()(double /*t*/, const Matrix& rho) const {
        Matrix out = Complex(0.0, -1.0) * (ham * rho - rho * ham);
        if (kappa != 0.0) {
            out -= kappa * (number * rho - 2.0 * (a * (rho * a_dag)) + rho * number);
        }
        return out;
    }
};

// Full-model generator with the two-sideband drive.
struct FullGenerator {
    Matrix ham_static;    // -Δ N + g X
    Matrix s_plus, s_minus;
    Matrix a, a_dag, number;
    double kappa = 0.0, efield = 0.0, omega_plus = 0.0, omega_minus = 0.0;

    FullGenerator(const hilbert::OperatorSet& ops, const SystemParams& p)
        : s_plus(ops.s_plus), s_minus(ops.s_minus),
          a(ops.a), a_dag(ops.a_dag), number(ops.number),
          kappa(p.kappa), efield(p.efield),
          omega_plus(p.omega0 + p.omega_drive), omega_minus(p.omega0 - p.omega_drive) {
        ham_static = -p.delta * ops.number + p.g * (ops.a * ops.s_plus + ops.s_minus * ops.a_dag);
    }

    Matrix operator()(double t, const Matrix& rho) const {
        Matrix ham = ham_static;
        if (efield != 0.0) {
            const Complex c = (efield / 2.0) * (std::exp(Complex(0.0, omega_plus * t)) +
                                                std::exp(Complex(0.0, omega_minus * t)));
            ham += c * s_plus + std::conj(c) * s_minus;
        }
        Matrix out = Complex(0.0, -1.0) * (ham * rho - rho * ham);
        if (kappa != 0.0) {
            out -= kappa * (number * rho - 2.0 * (a * (rho * a_dag)) + rho * number);
        }
        return out;
    }
};

struct ObservablePlan {
    int index_e0 = 0, index_g1 = 0, index_g0 = 0;
    Matrix excited_projector;

    explicit ObservablePlan(const hilbert::OperatorSet& ops)
        : index_e0(ops.space.index(hilbert::Atom::excited, 0)),
          index_g1(ops.space.index(hilbert::Atom::ground, 1)),
          index_g0(ops.space.index(hilbert::Atom::ground, 0)),
          excited_projector(ops.excited_projector) {}
};

void check_run_args(double t_max, double dt, int sample_every) {
    if (!(dt > 0.0)) throw std::invalid_argument("integrate: dt must be > 0");
    if (!(t_max > 0.0)) throw std::invalid_argument("integrate: t_max must be > 0");
    if (sample_every < 1) throw std::invalid_argument("integrate: sample_every must be >= 1");
}

// Measure, symmetrize, record and (optionally) enforce the sample invariants.
TrajectorySample take_sample(Matrix& rho, double t, const ObservablePlan& plan,
                             const IntegrateOptions& opts) {
    TrajectorySample s;
    s.t = t;
    s.herm_error = hilbert::hermiticity_error(rho);
    rho = 0.5 * (rho + rho.adjoint().eval());
    s.trace = rho.trace().real();
    s.rho_ee = rho(plan.index_e0, plan.index_e0).real();
    s.p_g1 = rho(plan.index_g1, plan.index_g1).real();
    s.p_g0 = rho(plan.index_g0, plan.index_g0).real();
    s.p_excited_atom = (rho * plan.excited_projector).trace().real();
    if (opts.record_eigenvalues) {
        s.min_eigenvalue = hilbert::min_eigenvalue(rho);
    }
    if (opts.check_invariants) {
        std::ostringstream why;
        if (s.herm_error > opts.abort_tol) {
            why << "hermiticity error " << s.herm_error;
        } else if (std::abs(s.trace - 1.0) > opts.abort_tol) {
            why << "trace drift " << std::abs(s.trace - 1.0);
        } else if (s.min_eigenvalue && *s.min_eigenvalue < -opts.abort_tol) {
            why << "negative eigenvalue " << *s.min_eigenvalue;
        }
        if (!why.str().empty()) {
            std::ostringstream msg;
            msg << "integrate: invariant breach at t = " << t << ": " << why.str()
                << " exceeds " << opts.abort_tol;
            throw invariant_violation(msg.str());
        }
    }
    return s;
}

template <typename Rhs>
Trajectory run_rk4(const Rhs& rhs, Matrix rho, const ObservablePlan& plan,
                   double t_max, double dt, int sample_every,
                   const IntegrateOptions& opts) {
    const long n_steps = static_cast<long>(std::ceil(t_max / dt - 1e-12));
    Trajectory traj;
    traj.times.reserve(static_cast<std::size_t>(n_steps / sample_every + 2));
    traj.samples.reserve(traj.times.capacity());

    const auto emit = [&](long step) {
        const double t = static_cast<double>(step) * dt;
        traj.samples.push_back(take_sample(rho, t, plan, opts));
        traj.times.push_back(t);
    };

    emit(0);
    for (long step = 0; step < n_steps; ++step) {
        const double t = static_cast<double>(step) * dt;
        const Matrix k1 = rhs(t, rho);
        const Matrix k2 = rhs(t + 0.5 * dt, (rho + (0.5 * dt) * k1).eval());
        const Matrix k3 = rhs(t + 0.5 * dt, (rho + (0.5 * dt) * k2).eval());
        const Matrix k4 = rhs(t + dt, (rho + dt * k3).eval());
        rho += (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        const long done = step + 1;
        if (done % sample_every == 0 || done == n_steps) emit(done);
    }
    return traj;
}

void check_rho0(const hilbert::DensityMatrix& rho0, const hilbert::SpaceSpec& spec) {
    if (rho0.dim() != spec.dim()) {
        throw std::invalid_argument("integrate: rho0 dimension does not match n_max");
    }
    hilbert::validate_density(rho0);
}

}  // namespace

// --------------------------- Right-hand sides --------------------------------

Matrix rhs_averaged(const Matrix& rho, const hilbert::OperatorSet& ops,
                    double g, double kappa, double delta_e) {
    if (rho.rows() != ops.space.dim() || rho.cols() != ops.space.dim()) {
        throw std::invalid_argument("rhs_averaged: dimension mismatch");
    }
    if (!std::isfinite(delta_e)) throw std::invalid_argument("rhs_averaged: delta_e must be finite");
    return AveragedGenerator(ops, g, kappa, delta_e)(0.0, rho);
}

Matrix rhs_averaged(const Matrix& rho, const SystemParams& p, double delta_e) {
    p.validate();
    return rhs_averaged(rho, hilbert::build_space({p.n_max}), p.g, p.kappa, delta_e);
}

Matrix rhs_full(const Matrix& rho, double t, const hilbert::OperatorSet& ops,
                const SystemParams& p) {
    if (rho.rows() != ops.space.dim() || rho.cols() != ops.space.dim()) {
        throw std::invalid_argument("rhs_full: dimension mismatch");
    }
    if (t < 0.0) throw std::invalid_argument("rhs_full: t must be >= 0");
    return FullGenerator(ops, p)(t, rho);
}

Matrix rhs_full(const Matrix& rho, double t, const SystemParams& p) {
    p.validate();
    return rhs_full(rho, t, hilbert::build_space({p.n_max}), p);
}

// ------------------------------ Integration ----------------------------------

Trajectory integrate_averaged(const hilbert::DensityMatrix& rho0,
                              const SystemParams& p, double delta_e,
                              double t_max, double dt, int sample_every,
                              const IntegrateOptions& opts) {
    p.validate();
    check_run_args(t_max, dt, sample_every);
    const auto ops = hilbert::build_space({p.n_max});
    check_rho0(rho0, ops.space);
    const AveragedGenerator gen(ops, p.g, p.kappa, delta_e);
    auto traj = run_rk4(gen, rho0.elements, ObservablePlan(ops), t_max, dt, sample_every, opts);
    traj.separation_warning = p.separation_warning();
    return traj;
}

Trajectory adiabatic_trajectory(const SystemParams& p, double delta_e,
                                double t_max, double dt, int sample_every) {
    p.validate();
    check_run_args(t_max, dt, sample_every);
    const auto rates = effective::rates(p.g, p.kappa, delta_e);
    const long n_steps = static_cast<long>(std::ceil(t_max / dt - 1e-12));
    Trajectory traj;
    const auto emit = [&](long step) {
        const double t = static_cast<double>(step) * dt;
        TrajectorySample s;
        s.t = t;
        s.rho_ee = effective::adiabatic_population(t, rates);
        s.p_excited_atom = s.rho_ee;
        s.p_g1 = 0.0;                 // cavity field adiabatically eliminated
        s.p_g0 = 1.0 - s.rho_ee;
        s.trace = 1.0;
        traj.samples.push_back(s);
        traj.times.push_back(t);
    };
    emit(0);
    for (long step = 1; step <= n_steps; ++step) {
        if (step % sample_every == 0 || step == n_steps) emit(step);
    }
    traj.separation_warning = p.separation_warning();
    return traj;
}

Trajectory integrate(const hilbert::DensityMatrix& rho0, ModelTier tier,
                     const SystemParams& p, double t_max, double dt,
                     int sample_every, const IntegrateOptions& opts) {
    p.validate();
    check_run_args(t_max, dt, sample_every);
    switch (tier) {
        case ModelTier::averaged:
            return integrate_averaged(rho0, p, p.averaged_delta_e(), t_max, dt,
                                      sample_every, opts);
        case ModelTier::adiabatic:
            return adiabatic_trajectory(p, p.averaged_delta_e(), t_max, dt, sample_every);
        case ModelTier::full: {
            const double bound = p.full_step_bound();
            if (dt > bound * (1.0 + 1e-12)) {
                std::ostringstream msg;
                msg << "integrate: full-tier step size " << dt
                    << " violates the fast-oscillation bound " << bound
                    << " = (2*pi/(omega0+omega_drive))/50";
                throw std::invalid_argument(msg.str());
            }
            const auto ops = hilbert::build_space({p.n_max});
            check_rho0(rho0, ops.space);
            const FullGenerator gen(ops, p);
            auto traj = run_rk4(gen, rho0.elements, ObservablePlan(ops), t_max, dt,
                                sample_every, opts);
            traj.separation_warning = p.separation_warning();
            return traj;
        }
    }
    throw std::invalid_argument("integrate: unknown tier");
}

// ---------------------------- Tier comparison --------------------------------

TierComparison compare_tiers(const SystemParams& p, double t_max, double dt,
                             int sample_every) {
    p.validate();
    TierComparison cmp;

    const auto rho0_full =
        hilbert::pure_state(hilbert::Atom::excited, 0, hilbert::SpaceSpec{p.n_max});
    cmp.full = integrate(rho0_full, ModelTier::full, p, t_max, dt, sample_every);

    SystemParams avg = p;
    avg.n_max = 1;
    const auto rho0_avg =
        hilbert::pure_state(hilbert::Atom::excited, 0, hilbert::SpaceSpec{1});
    const double delta_e = p.averaged_delta_e();
    cmp.averaged = integrate_averaged(rho0_avg, avg, delta_e, t_max, dt, sample_every);

    const auto rates = effective::rates(p.g, p.kappa, delta_e);
    cmp.adiabatic_rho_ee.reserve(cmp.averaged.times.size());
    for (double t : cmp.averaged.times) {
        cmp.adiabatic_rho_ee.push_back(effective::adiabatic_population(t, rates));
    }

    const std::size_t n = std::min(cmp.full.samples.size(), cmp.averaged.samples.size());
    for (std::size_t i = 0; i < n; ++i) {
        cmp.max_full_vs_averaged =
            std::max(cmp.max_full_vs_averaged,
                     std::abs(cmp.full.samples[i].rho_ee - cmp.averaged.samples[i].rho_ee));
        cmp.max_averaged_vs_adiabatic =
            std::max(cmp.max_averaged_vs_adiabatic,
                     std::abs(cmp.averaged.samples[i].rho_ee - cmp.adiabatic_rho_ee[i]));
    }
    return cmp;
}

}  // namespace starkcav::dynamics
