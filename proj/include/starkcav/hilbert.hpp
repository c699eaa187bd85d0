// hilbert.hpp — Truncated atom⊗cavity space and the operator algebra on it.
//
// Conventions used throughout the library:
//   * ħ = 1; every parameter is an angular frequency in one common unit
//     (the examples use units of g), time is in inverse units of the same.
//   * Basis ordering is atom-major: index(atom, n) = atom*(n_max+1) + n with
//     atom ∈ {g=0, e=1} and n ∈ {0..n_max}.  For n_max = 1 the basis reads
//     |g,0⟩, |g,1⟩, |e,0⟩, |e,1⟩, so the decay-relevant triple
//     {|g,0⟩, |g,1⟩, |e,0⟩} occupies contiguous-indexable slots.
//   * Operators are dense: dimensions stay at 2*(n_max+1) with n_max ≲ 10,
//     where dense matrices are simpler and faster than sparse ones.
//
// All values are immutable after construction and safe to share across
// threads read-only.

#pragma once

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>

namespace starkcav {

using Matrix = Eigen::MatrixXcd;
using Complex = std::complex<double>;

namespace hilbert {

enum class Atom { ground = 0, excited = 1 };

// --------------------------- Space specification ----------------------------

struct SpaceSpec {
    int n_max = 1;   // highest retained Fock level; joint dimension 2*(n_max+1)

    int fock_levels() const { return n_max + 1; }
    int dim() const { return 2 * (n_max + 1); }

    // throws std::invalid_argument when n_max < 1
    void validate() const;

    // bounds-checked basis index
    int index(Atom atom, int photons) const;
};

// ------------------------------ Operator set --------------------------------

// Joint-space matrices in the fixed basis ordering above.  a carries one
// superdiagonal per atomic block (a|atom,n⟩ = √n |atom,n-1⟩); a_dag and
// s_plus are the exact conjugate transposes of a and s_minus; s_z has
// eigenvalues ±1/2 so that ω₀·s_z splits the atomic levels by ω₀; number
// is the exact diagonal (0..n_max) per atomic block.
struct OperatorSet {
    SpaceSpec space;
    Matrix a;
    Matrix a_dag;
    Matrix s_plus;
    Matrix s_minus;
    Matrix s_z;
    Matrix number;
    Matrix excited_projector;   // s_plus * s_minus, projects onto atom = e
};

// Deterministic: identical specs give bit-identical matrices.
OperatorSet build_space(const SpaceSpec& spec);

// ------------------------------ Density matrix ------------------------------

struct DensityMatrix {
    Matrix elements;

    int dim() const { return static_cast<int>(elements.rows()); }
    double trace() const { return elements.trace().real(); }
};

// Rank-one projector onto |atom, photons⟩; trace exactly 1.
DensityMatrix pure_state(Atom atom, int photons, const SpaceSpec& spec);

// tr(rho * op); real to ~1e-12 when op is Hermitian.
Complex expectation(const DensityMatrix& rho, const Matrix& op);

// ------------------------------ Diagnostics ---------------------------------

// max_ij |m - m†|
double hermiticity_error(const Matrix& m);

// smallest eigenvalue of the Hermitian part of m
double min_eigenvalue(const Matrix& m);

// Checks Hermiticity (1e-12), positivity (eigenvalues ≥ -1e-9) and
// |trace - 1| ≤ trace_tol; throws std::invalid_argument on breach.
void validate_density(const DensityMatrix& rho, double trace_tol = 1e-9);

}  // namespace hilbert
}  // namespace starkcav
