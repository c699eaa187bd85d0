// timeavg.hpp — Second-order time averaging of rapidly oscillating couplings.
//
// For V(t) = Σ_j M_j e^{iν_j t} with zero time average, the effective static
// Hamiltonian is the secular part of  -i V(t) ∫₀ᵗ V(τ)dτ :
//
//     H_eff = Σ_{(j,k) : |ν_j+ν_k| ≤ dc_cutoff}  -M_j M_k / ν_k .
//
// dc_cutoff decides which pair beat notes count as secular.  With a two-tone
// drive at ω₀±Ω the cross-sideband beats sit at ±2Ω: counting them as dc
// (cutoff ≥ 2Ω, appropriate when the observation window is short against
// 1/Ω) yields the full quasi-static shift; a strict long-time average
// (cutoff → 0) keeps only exact-dc pairs and yields half of it.
// numeric_average_check implements the strict long-time average.
//
// Pure functions; freely concurrent.

#pragma once

#include "starkcav/hilbert.hpp"

#include <vector>

namespace starkcav::timeavg {

// One oscillating coupling M e^{iνt}.  A valid term list is closed under
// conjugation — for every (M, ν) it also contains (M†, -ν) — and contains
// no term with |ν| ≤ dc_cutoff (in particular none at zero frequency).
struct OscillatingTerm {
    Matrix matrix;
    double frequency = 0.0;
};

// The four drive sidebands (ℰ/2)S± e^{±i(ω₀±Ω)t} on the 2x2 atomic space,
// basis (g, e).
std::vector<OscillatingTerm> drive_terms(double efield, double omega0, double omega_drive);

// Secular effective Hamiltonian; Hermitian to ~1e-12 for valid inputs.
// Throws std::invalid_argument on invariant violations.
Matrix effective_hamiltonian(const std::vector<OscillatingTerm>& terms, double dc_cutoff);

// Brute-force check: trapezoid average of -i V(t) ∫₀ᵗ V(τ)dτ over
// period_count common periods, sampled samples_per_period times per common
// period.  Requires commensurate frequencies; converges (second order in the
// step) to effective_hamiltonian(terms, 0⁺) as samples grow.
Matrix numeric_average_check(const std::vector<OscillatingTerm>& terms,
                             int period_count, int samples_per_period);

// ⟨e|h|e⟩ - ⟨g|h|g⟩ for a 2x2 atomic operator: the shift of the atomic
// splitting, directly comparable to effective_detuning's Stark shift.
double atomic_splitting_shift(const Matrix& h);

}  // namespace starkcav::timeavg
