// effective.hpp — Closed-form quantities: Stark-shifted detuning, bad-cavity
// decay rate and level shift, the inhibition/enhancement ratio, the exact
// damped vacuum-Rabi population, and the experimental-estimate calculator.
//
// Pure functions throughout; freely concurrent.

#pragma once

#include <optional>
#include <stdexcept>

namespace starkcav::effective {

// ------------------------------ Stark input ---------------------------------

// Exactly one of two equivalent parameterizations of the dc Stark shift:
//   frequency form:       shift = 2*omega0*efield^2 / (omega0^2 - omega_drive^2)
//   polarizability form:  shift = alpha0 * efield_dc^2
// The two coincide under the identification alpha0*efield_dc^2 ↔ the
// frequency-form expression; alpha0 is an opaque coefficient with dimensions
// frequency/(field^2) and efield_dc is the dc field in esu.
class StarkInput {
  public:
    static StarkInput frequency_form(double efield, double omega_drive, double omega0);
    static StarkInput polarizability_form(double alpha0, double efield_dc);

    // detuning added to the bare delta
    double shift() const;

    bool is_frequency_form() const { return frequency_; }

  private:
    StarkInput() = default;
    bool frequency_ = true;
    double efield_ = 0.0, omega_drive_ = 0.0, omega0_ = 0.0;
    double alpha0_ = 0.0, efield_dc_ = 0.0;
};

// delta_e = delta + shift
double effective_detuning(double delta, const StarkInput& stark);

// ------------------------- Bad-cavity closed forms ---------------------------

struct EffectiveRates {
    double gamma = 0.0;   // decay parameter Γ (population decays at 2Γ)
    double shift = 0.0;   // level shift δ
};

// Γ = g²κ/(κ²+Δe²), δ = g²Δe/(κ²+Δe²).  Requires kappa > 0; the adiabatic
// validity band is g² ≪ κ² + Δe².
EffectiveRates rates(double g, double kappa, double delta_e);

// η = (κ²+Δ²)/(κ²+Δe²); η < 1 signals inhibition, η > 1 enhancement.
double eta(double kappa, double delta, double delta_e);

// exp(-2Γt): excited-state population in the adiabatic (bad-cavity) limit.
double adiabatic_population(double t, const EffectiveRates& r);

// Exact ρ_ee(t) = |c_e(t)|² from the two-amplitude system
//   d/dt c_e = -i g c_1,   d/dt c_1 = (iΔe - κ) c_1 - i g c_e,
// which is exact for the averaged master equation started in |e,0⟩ (the only
// decay channel feeds the dark state |g,0⟩).  Serves as the independent
// oracle for the integrator.
double damped_rabi_population(double g, double kappa, double delta_e, double t);

// κ = ω_c / (2Q)
double kappa_from_q(double omega_c, double q);

// --------------------------- Experimental estimate --------------------------

// Field needed for the inhibition to become significant, from the threshold
// condition  (stark shift) ~ κ.  Inputs are ordinary frequencies in Hz;
// dipole_esu is a transition dipole in esu (statC·cm), alpha0 in Hz/esu².
// The frequency-form output uses the simplifying identification
// alpha0*Ed² ≈ 2E²/omega0 (exposed as `assumption` below).
struct SignificanceEstimate {
    double efield_hz = 0.0;                            // √(κ ω₀ / 2)
    std::optional<double> efield_dc_esu_from_dipole;   // ħ(2π efield)/d
    std::optional<double> efield_dc_esu_from_alpha0;   // √(κ/α₀)
    static constexpr const char* assumption =
        "assumes alpha0*Ed^2 ~ 2*E^2/omega0 (scalar threshold identification)";
};

SignificanceEstimate significance_estimate(double kappa_hz, double omega0_hz,
                                           std::optional<double> dipole_esu = std::nullopt,
                                           std::optional<double> alpha0 = std::nullopt);

}  // namespace starkcav::effective
