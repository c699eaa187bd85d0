#include "starkcav/effective.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <string>

namespace starkcav::effective {

namespace {
constexpr double kHbarErgS = 1.054571817e-27;   // CGS, erg*s
}

StarkInput StarkInput::frequency_form(double efield, double omega_drive, double omega0) {
    if (omega0 <= 0.0) {
        throw std::invalid_argument("StarkInput: omega0 must be > 0");
    }
    if (omega_drive < 0.0 || omega_drive >= omega0) {
        throw std::invalid_argument(
            "StarkInput: omega_drive must satisfy 0 <= omega_drive < omega0");
    }
    if (efield < 0.0) {
        throw std::invalid_argument("StarkInput: efield must be >= 0");
    }
    StarkInput s;
    s.frequency_ = true;
    s.efield_ = efield;
    s.omega_drive_ = omega_drive;
    s.omega0_ = omega0;
    return s;
}

StarkInput StarkInput::polarizability_form(double alpha0, double efield_dc) {
    StarkInput s;
    s.frequency_ = false;
    s.alpha0_ = alpha0;
    s.efield_dc_ = efield_dc;
    if (!std::isfinite(s.shift())) {
        throw std::invalid_argument("StarkInput: alpha0*efield_dc^2 must be finite");
    }
    return s;
}

double StarkInput::shift() const {
    if (frequency_) {
        return 2.0 * omega0_ * efield_ * efield_ /
               (omega0_ * omega0_ - omega_drive_ * omega_drive_);
    }
    return alpha0_ * efield_dc_ * efield_dc_;
}

double effective_detuning(double delta, const StarkInput& stark) {
    return delta + stark.shift();
}

EffectiveRates rates(double g, double kappa, double delta_e) {
    if (kappa <= 0.0) {
        throw std::invalid_argument("rates: kappa must be > 0 (lossy cavity required)");
    }
    const double denom = kappa * kappa + delta_e * delta_e;
    EffectiveRates r;
    r.gamma = g * g * kappa / denom;
    r.shift = g * g * delta_e / denom;
    return r;
}

double eta(double kappa, double delta, double delta_e) {
    if (kappa <= 0.0) {
        throw std::invalid_argument("eta: kappa must be > 0");
    }
    return (kappa * kappa + delta * delta) / (kappa * kappa + delta_e * delta_e);
}

double adiabatic_population(double t, const EffectiveRates& r) {
    if (t < 0.0) throw std::invalid_argument("adiabatic_population: t must be >= 0");
    return std::exp(-2.0 * r.gamma * t);
}

double damped_rabi_population(double g, double kappa, double delta_e, double t) {
    if (t < 0.0) throw std::invalid_argument("damped_rabi_population: t must be >= 0");
    using C = std::complex<double>;
    const C s(-kappa, delta_e);
    const C disc = std::sqrt(s * s - 4.0 * g * g);
    const double scale = std::max({std::abs(s), 2.0 * g, 1e-300});
    C ce;
    if (std::abs(disc) < 1e-13 * scale) {
        // confluent roots: c_e = e^{λt}(1 - λt) with λ = s/2
        const C lam = 0.5 * s;
        ce = std::exp(lam * t) * (1.0 - lam * t);
    } else {
        const C lp = 0.5 * (s + disc);
        const C lm = 0.5 * (s - disc);
        ce = (lp * std::exp(lm * t) - lm * std::exp(lp * t)) / (lp - lm);
    }
    return std::norm(ce);
}

double kappa_from_q(double omega_c, double q) {
    if (omega_c <= 0.0 || q <= 0.0) {
        throw std::invalid_argument("kappa_from_q: omega_c and Q must be > 0");
    }
    return omega_c / (2.0 * q);
}

SignificanceEstimate significance_estimate(double kappa_hz, double omega0_hz,
                                           std::optional<double> dipole_esu,
                                           std::optional<double> alpha0) {
    if (kappa_hz <= 0.0 || omega0_hz <= 0.0) {
        throw std::invalid_argument("significance_estimate: kappa and omega0 must be > 0");
    }
    SignificanceEstimate out;
    out.efield_hz = std::sqrt(kappa_hz * omega0_hz / 2.0);
    if (dipole_esu) {
        if (*dipole_esu <= 0.0) {
            throw std::invalid_argument("significance_estimate: dipole must be > 0");
        }
        // coupling energy ħω with ω = 2π * efield_hz, field = energy / dipole
        out.efield_dc_esu_from_dipole =
            kHbarErgS * (2.0 * std::numbers::pi * out.efield_hz) / *dipole_esu;
    }
    if (alpha0) {
        if (*alpha0 <= 0.0) {
            throw std::invalid_argument("significance_estimate: alpha0 must be > 0");
        }
        out.efield_dc_esu_from_alpha0 = std::sqrt(kappa_hz / *alpha0);
    }
    return out;
}

}  // namespace starkcav::effective
