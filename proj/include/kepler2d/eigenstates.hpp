#pragma once

// Closed-form bound-state data for the planar Coulomb problem in excitonic
// Rydberg units: energies, real-space wavefunctions, momentum-space
// eigenfunctions, and the Fourier/Hankel consistency bridge between them.

#include <cmath>
#include <complex>
#include <stdexcept>

#include "kepler2d/quadrature.hpp"
#include "kepler2d/special_functions.hpp"
#include "kepler2d/verification.hpp"

namespace kepler2d::eigenstates {

/// Principal n >= 0 and azimuthal m with |m| <= n.
struct QuantumNumbers {
    int n = 0;
    int m = 0;

    QuantumNumbers(int n_, int m_) : n(n_), m(m_) {
        if (n < 0) throw std::domain_error("QuantumNumbers: n < 0");
        if (std::abs(m) > n) throw std::domain_error("QuantumNumbers: |m| > n");
    }
    int abs_m() const { return m < 0 ? -m : m; }
};

/// energy = -q0^2,  q0 = 1/(n + 1/2); everything dimensionless.
struct EnergyLevel {
    double energy;
    double q0;
};

struct RealSpacePoint {
    double rho = 0.0;
    double phi_rho = 0.0;
};

struct MomentumPoint {
    double qx = 0.0;
    double qy = 0.0;

    double q() const { return std::hypot(qx, qy); }
    double phi_q() const { return std::atan2(qy, qx); }
};

inline EnergyLevel energy_level(int n) {
    if (n < 0) throw std::domain_error("energy_level: n < 0");
    const double q0 = 1.0 / (n + 0.5);
    return {-q0 * q0, q0};
}

/// Shell multiplicity 2n+1.
inline int degeneracy(int n) {
    if (n < 0) throw std::domain_error("degeneracy: n < 0");
    return 2 * n + 1;
}

/// Normalized real-space eigenfunction
///   sqrt(q0^3 (n-|m|)!/(pi (n+|m|)!)) (2 q0 rho)^{|m|} e^{-q0 rho}
///     L_{n-|m|}^{2|m|}(2 q0 rho) e^{i m phi}
inline std::complex<double> psi_real(const QuantumNumbers& qn, const RealSpacePoint& p) {
    if (p.rho < 0.0) throw std::domain_error("psi_real: rho < 0");
    const int am = qn.abs_m();
    const double q0 = energy_level(qn.n).q0;
    const double beta = 2.0 * q0 * p.rho;
    const double norm =
        std::sqrt(q0 * q0 * q0 / M_PI * specfun::factorial_ratio(qn.n, am));
    const double radial = std::pow(beta, am) * std::exp(-q0 * p.rho) *
                          specfun::assoc_laguerre(qn.n - am, 2 * am, beta);
    return norm * radial * std::polar(1.0, qn.m * p.phi_rho);
}

/// Orthonormal momentum-space eigenfunction
///   (-i)^{|m|} sqrt(2 pi (n-|m|)!/(n+|m|)!) (2 q0/(q^2+q0^2))^{3/2}
///     * (-1)^{|m|} P_n^{|m|}(cos theta) e^{i m phi},
/// cos theta = (q^2-q0^2)/(q^2+q0^2).  Uses the Ferrers Legendre function,
/// matching spherical_harmonic.
inline std::complex<double> phi_momentum(const QuantumNumbers& qn, const MomentumPoint& k) {
    const int am = qn.abs_m();
    const double q0 = energy_level(qn.n).q0;
    const double q2 = k.qx * k.qx + k.qy * k.qy;
    const double denom = q2 + q0 * q0;
    const double cos_theta = (q2 - q0 * q0) / denom;
    const double norm = std::sqrt(2.0 * M_PI * specfun::factorial_ratio(qn.n, am));
    const double weight = std::pow(2.0 * q0 / denom, 1.5);
    const double plm = specfun::ferrers_legendre(qn.n, am, cos_theta);
    return specfun::phase_factor(qn.m).value * norm * weight * plm *
           std::polar(1.0, qn.m * k.phi_q());
}

namespace detail {

// Radial reconstruction integral in the scaled variables x = q0 rho,
// y = q^2/q0^2:
//   I = int_0^inf P~_n^{|m|}((y-1)/(y+1)) J_m(x sqrt(y)) (1+y)^{-3/2} dy
// with P~ the Ferrers function and J of signed order m.  The full inverse
// transform is  c_m (-i)^m sqrt(q0 r / pi) e^{i m phi} I.
inline quadrature::QuadResult<double> radial_inverse_integral(int n, int m, double x,
                                                              double tol) {
    const int am = m < 0 ? -m : m;
    auto integrand = [n, am, m, x](double y) {
        const double arg = (y - 1.0) / (y + 1.0);
        return specfun::ferrers_legendre(n, am, arg) *
               specfun::bessel_j(m, x * std::sqrt(y)) *
               std::pow(1.0 + y, -1.5);
    };
    if (x > 0.0)
        return quadrature::integrate_oscillatory_semiinfinite(integrand, m, x, tol);

    // x = 0 limit (only reachable for m = 0): substitute u = (1-y)/(1+y) to
    // compress [0,inf) onto [-1,1]; J_0(0) = 1 drops out.
    auto compressed = [n](double u) {
        return specfun::ferrers_legendre(n, 0, -u) / std::sqrt(2.0 * (1.0 + u));
    };
    auto r = quadrature::integrate_finite(compressed, -1.0, 1.0, tol, 20000);
    return r;
}

} // namespace detail

/// Reconstructs Psi(rho) from the momentum eigenfunction through the
/// one-dimensional radial integral and compares with psi_real.
inline VerificationReport fourier_consistency(const QuantumNumbers& qn,
                                              const RealSpacePoint& p, double tol) {
    const int am = qn.abs_m();
    const double q0 = energy_level(qn.n).q0;
    const double x = q0 * p.rho;

    std::complex<double> reconstructed;
    long cost = 0;
    if (x == 0.0 && am != 0) {
        reconstructed = 0.0;  // (2 q0 rho)^{|m|} kills the closed form as well
    } else {
        auto integral = detail::radial_inverse_integral(qn.n, qn.m, x, 0.2 * tol);
        cost = integral.n_evals;
        const double prefactor =
            std::sqrt(q0 * specfun::factorial_ratio(qn.n, am) / M_PI);
        const std::complex<double> phase =
            specfun::phase_factor(qn.m).value * specfun::minus_i_pow(qn.m);
        reconstructed = phase * prefactor * integral.value *
                        std::polar(1.0, qn.m * p.phi_rho);
    }
    const std::complex<double> closed_form = psi_real(qn, p);
    return make_report("fourier n=" + std::to_string(qn.n) + " m=" + std::to_string(qn.m) +
                           " rho=" + std::to_string(p.rho),
                       reconstructed, closed_form, tol, cost);
}

} // namespace kepler2d::eigenstates
