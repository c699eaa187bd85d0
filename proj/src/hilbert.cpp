#include "starkcav/hilbert.hpp"

#include <cmath>
#include <string>

namespace starkcav::hilbert {

void SpaceSpec::validate() const {
    if (n_max < 1) {
        throw std::invalid_argument("SpaceSpec: n_max must be >= 1, got " +
                                    std::to_string(n_max));
    }
}

int SpaceSpec::index(Atom atom, int photons) const {
    validate();
    if (photons < 0 || photons > n_max) {
        throw std::out_of_range("SpaceSpec::index: photon number " +
                                std::to_string(photons) + " outside [0, " +
                                std::to_string(n_max) + "]");
    }
    return static_cast<int>(atom) * (n_max + 1) + photons;
}

OperatorSet build_space(const SpaceSpec& spec) {
    spec.validate();
    const int nf = spec.fock_levels();
    const int d = spec.dim();

    OperatorSet ops;
    ops.space = spec;
    ops.a = Matrix::Zero(d, d);
    ops.s_minus = Matrix::Zero(d, d);
    ops.s_z = Matrix::Zero(d, d);
    ops.number = Matrix::Zero(d, d);

    for (int atom = 0; atom < 2; ++atom) {
        const int base = atom * nf;
        for (int n = 0; n < nf; ++n) {
            ops.number(base + n, base + n) = static_cast<double>(n);
            ops.s_z(base + n, base + n) = (atom == 1) ? 0.5 : -0.5;
            if (n >= 1) ops.a(base + n - 1, base + n) = std::sqrt(static_cast<double>(n));
        }
    }
    // s_minus = |g⟩⟨e| ⊗ 1_field
    for (int n = 0; n < nf; ++n) ops.s_minus(n, nf + n) = 1.0;

    ops.a_dag = ops.a.adjoint();
    ops.s_plus = ops.s_minus.adjoint();
    ops.excited_projector = ops.s_plus * ops.s_minus;
    return ops;
}

DensityMatrix pure_state(Atom atom, int photons, const SpaceSpec& spec) {
    const int i = spec.index(atom, photons);
    DensityMatrix rho;
    rho.elements = Matrix::Zero(spec.dim(), spec.dim());
    rho.elements(i, i) = 1.0;
    return rho;
}

Complex expectation(const DensityMatrix& rho, const Matrix& op) {
    if (rho.elements.rows() != op.rows() || rho.elements.cols() != op.cols()) {
        throw std::invalid_argument("expectation: dimension mismatch");
    }
    return (rho.elements * op).trace();
}

double hermiticity_error(const Matrix& m) {
    return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

double min_eigenvalue(const Matrix& m) {
    const Matrix h = 0.5 * (m + m.adjoint());
    Eigen::SelfAdjointEigenSolver<Matrix> solver(h, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("min_eigenvalue: eigensolver failed");
    }
    return solver.eigenvalues().minCoeff();
}

void validate_density(const DensityMatrix& rho, double trace_tol) {
    if (rho.elements.rows() != rho.elements.cols() || rho.elements.rows() == 0) {
        throw std::invalid_argument("validate_density: matrix must be square and non-empty");
    }
    const double herm = hermiticity_error(rho.elements);
    if (herm > 1e-12) {
        throw std::invalid_argument("validate_density: hermiticity error " +
                                    std::to_string(herm) + " exceeds 1e-12");
    }
    const double tr_err = std::abs(rho.trace() - 1.0);
    if (tr_err > trace_tol) {
        throw std::invalid_argument("validate_density: |trace-1| = " +
                                    std::to_string(tr_err) + " exceeds tolerance");
    }
    const double lam = min_eigenvalue(rho.elements);
    if (lam < -1e-9) {
        throw std::invalid_argument("validate_density: eigenvalue " +
                                    std::to_string(lam) + " below -1e-9");
    }
}

}  // namespace starkcav::hilbert
