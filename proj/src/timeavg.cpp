#include "starkcav/timeavg.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace starkcav::timeavg {

namespace {

double max_abs_frequency(const std::vector<OscillatingTerm>& terms) {
    double m = 0.0;
    for (const auto& t : terms) m = std::max(m, std::abs(t.frequency));
    return m;
}

void validate_terms(const std::vector<OscillatingTerm>& terms, double dc_cutoff) {
    if (dc_cutoff < 0.0) {
        throw std::invalid_argument("timeavg: dc_cutoff must be >= 0");
    }
    if (terms.empty()) return;
    const auto rows = terms.front().matrix.rows();
    const double fmax = max_abs_frequency(terms);
    const double freq_tol = 1e-9 * fmax;
    for (const auto& t : terms) {
        if (t.matrix.rows() != rows || t.matrix.cols() != rows) {
            throw std::invalid_argument("timeavg: all term matrices must be square of one size");
        }
        if (std::abs(t.frequency) <= dc_cutoff || t.frequency == 0.0) {
            throw std::invalid_argument("timeavg: term frequency " +
                                        std::to_string(t.frequency) +
                                        " not above the dc cutoff");
        }
        // conjugate partner (M†, -ν) must be present
        bool paired = false;
        for (const auto& u : terms) {
            if (std::abs(u.frequency + t.frequency) <= freq_tol &&
                (u.matrix - t.matrix.adjoint()).cwiseAbs().maxCoeff() <= 1e-12) {
                paired = true;
                break;
            }
        }
        if (!paired) {
            throw std::invalid_argument(
                "timeavg: term list is not closed under conjugation (missing (M^dag, -nu) "
                "partner for frequency " + std::to_string(t.frequency) + ")");
        }
    }
}

// positive float gcd with relative tolerance; 0 on failure
double common_base_frequency(const std::vector<OscillatingTerm>& terms) {
    const double fmax = max_abs_frequency(terms);
    const double tol = 1e-9 * fmax;
    double base = 0.0;
    for (const auto& t : terms) {
        double a = std::abs(t.frequency);
        if (base == 0.0) {
            base = a;
            continue;
        }
        double b = base;
        while (b > tol) {
            const double r = std::fmod(a, b);
            a = b;
            b = (r > b - tol) ? 0.0 : r;   // treat near-multiples as exact
        }
        base = a;
    }
    // an honest common divisor is a sizable fraction of the frequencies;
    // irrational ratios drive the Euclid residue toward the tolerance floor
    if (base <= 1e-6 * fmax) return 0.0;
    for (const auto& t : terms) {
        const double q = std::abs(t.frequency) / base;
        if (std::abs(q - std::round(q)) > 1e-6) return 0.0;
    }
    return base;
}

}  // namespace

std::vector<OscillatingTerm> drive_terms(double efield, double omega0, double omega_drive) {
    if (omega0 <= 0.0 || omega_drive < 0.0 || omega_drive >= omega0) {
        throw std::invalid_argument("drive_terms: require omega0 > 0 and 0 <= omega_drive < omega0");
    }
    Matrix sp = Matrix::Zero(2, 2);
    sp(1, 0) = 1.0;                      // |e><g|
    const Matrix sm = sp.adjoint();
    const double c = efield / 2.0;
    return {
        {c * sp, omega0 + omega_drive},
        {c * sp, omega0 - omega_drive},
        {c * sm, -(omega0 + omega_drive)},
        {c * sm, -(omega0 - omega_drive)},
    };
}

Matrix effective_hamiltonian(const std::vector<OscillatingTerm>& terms, double dc_cutoff) {
    validate_terms(terms, dc_cutoff);
    if (terms.empty()) return Matrix::Zero(0, 0);
    const auto d = terms.front().matrix.rows();
    Matrix h = Matrix::Zero(d, d);
    for (const auto& tj : terms) {
        for (const auto& tk : terms) {
            if (std::abs(tj.frequency + tk.frequency) <= dc_cutoff) {
                h -= (tj.matrix * tk.matrix) / tk.frequency;
            }
        }
    }
    return h;
}

Matrix numeric_average_check(const std::vector<OscillatingTerm>& terms,
                             int period_count, int samples_per_period) {
    validate_terms(terms, 0.0);
    if (terms.empty()) return Matrix::Zero(0, 0);
    if (period_count < 1 || samples_per_period < 2) {
        throw std::invalid_argument("numeric_average_check: need period_count >= 1 and "
                                    "samples_per_period >= 2");
    }
    const double base = common_base_frequency(terms);
    if (base == 0.0) {
        throw std::invalid_argument("numeric_average_check: frequencies are not commensurate");
    }
    const double fmax = max_abs_frequency(terms);
    if (static_cast<double>(samples_per_period) * base <= 4.0 * fmax) {
        throw std::invalid_argument(
            "numeric_average_check: samples_per_period too small to resolve the fastest "
            "beat (need samples_per_period * base > 4 * max|nu|)");
    }

    const auto d = terms.front().matrix.rows();
    const double period = 2.0 * std::numbers::pi / base;
    const double dt = period / static_cast<double>(samples_per_period);
    const long steps = static_cast<long>(period_count) * samples_per_period;

    const auto v_at = [&](double t) {
        Matrix v = Matrix::Zero(d, d);
        for (const auto& term : terms) {
            v += term.matrix * std::exp(Complex(0.0, term.frequency * t));
        }
        return v;
    };

    // running trapezoid for ∫V, trapezoid for the window average of V·∫V
    Matrix integral = Matrix::Zero(d, d);
    Matrix v_prev = v_at(0.0);
    Matrix acc = 0.5 * (v_prev * integral);   // zero, kept for symmetry of the rule
    for (long k = 1; k <= steps; ++k) {
        const double t = static_cast<double>(k) * dt;
        const Matrix v = v_at(t);
        integral += (dt / 2.0) * (v_prev + v);
        const Matrix w = v * integral;
        acc += (k < steps) ? w : 0.5 * w;
        v_prev = v;
    }
    return Complex(0.0, -1.0) * acc / static_cast<double>(steps);
}

double atomic_splitting_shift(const Matrix& h) {
    if (h.rows() != 2 || h.cols() != 2) {
        throw std::invalid_argument("atomic_splitting_shift: expects a 2x2 atomic operator");
    }
    return h(1, 1).real() - h(0, 0).real();
}

}  // namespace starkcav::timeavg
