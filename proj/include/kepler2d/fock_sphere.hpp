#pragma once

// Stereographic projection between planar momentum space and the unit
// sphere, the sphere-side wavefunction chi, the Nystrom eigenproblem for the
// 1/|u-u'| kernel, and the infinitesimal-rotation generator check.

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include <lapacke.h>

#include "kepler2d/eigenstates.hpp"
#include "kepler2d/quadrature.hpp"
#include "kepler2d/verification.hpp"

namespace kepler2d::fock {

using eigenstates::MomentumPoint;
using eigenstates::QuantumNumbers;

struct SpherePoint {
    double ux = 0.0, uy = 0.0, uz = -1.0;

    double theta() const { return std::acos(std::clamp(uz, -1.0, 1.0)); }
    double phi() const { return std::atan2(uy, ux); }
    double norm() const { return std::sqrt(ux * ux + uy * uy + uz * uz); }
};

/// Stereographic image of a momentum point: q = 0 maps to the south pole,
/// q -> inf to the north pole, |q| = q0 to the equator.
inline SpherePoint project(const MomentumPoint& k, double q0) {
    if (!(q0 > 0.0)) throw std::domain_error("project: q0 > 0");
    const double q2 = k.qx * k.qx + k.qy * k.qy;
    const double d = q2 + q0 * q0;
    return {2.0 * q0 * k.qx / d, 2.0 * q0 * k.qy / d, (q2 - q0 * q0) / d};
}

inline MomentumPoint unproject(const SpherePoint& u, double q0) {
    if (!(q0 > 0.0)) throw std::domain_error("unproject: q0 > 0");
    if (u.uz >= 1.0) throw std::domain_error("unproject: north pole has no finite momentum");
    const double q = q0 * std::sqrt((1.0 + u.uz) / (1.0 - u.uz));
    const double s = std::hypot(u.ux, u.uy);
    if (s == 0.0) return {0.0, 0.0};
    return {q * u.ux / s, q * u.uy / s};
}

/// Chord length vs the conformal factor:
///   |u - u'| = 2 q0 |q - q'| / sqrt((q^2+q0^2)(q'^2+q0^2)).
inline VerificationReport chord_identity_check(const MomentumPoint& k1,
                                               const MomentumPoint& k2, double q0) {
    const SpherePoint u1 = project(k1, q0);
    const SpherePoint u2 = project(k2, q0);
    const double lhs = std::sqrt((u1.ux - u2.ux) * (u1.ux - u2.ux) +
                                 (u1.uy - u2.uy) * (u1.uy - u2.uy) +
                                 (u1.uz - u2.uz) * (u1.uz - u2.uz));
    const double dq = std::hypot(k1.qx - k2.qx, k1.qy - k2.qy);
    const double w1 = k1.qx * k1.qx + k1.qy * k1.qy + q0 * q0;
    const double w2 = k2.qx * k2.qx + k2.qy * k2.qy + q0 * q0;
    const double rhs = 2.0 * q0 * dq / std::sqrt(w1 * w2);
    return make_report("chord identity", lhs, rhs, 1e-12);
}

/// Sphere-side wavefunction chi(u) = (1/sqrt(q0)) ((q^2+q0^2)/(2q0))^{3/2} Phi(q).
/// For the bound-state eigenfunctions this equals 2 pi Y_n^m(theta, phi).
inline std::complex<double> chi_from_phi(const QuantumNumbers& qn, const SpherePoint& u) {
    const double q0 = eigenstates::energy_level(qn.n).q0;
    const MomentumPoint k = unproject(u, q0);
    const double q2 = k.qx * k.qx + k.qy * k.qy;
    const double w = std::pow((q2 + q0 * q0) / (2.0 * q0), 1.5);
    return w / std::sqrt(q0) * eigenstates::phi_momentum(qn, k);
}

/// Spectrum of the discretized sphere-kernel operator
///   (K chi)(u) = (1/(2 pi q0)) int chi(u') dOmega' / |u - u'|.
/// Eigenvalues cluster at 2/(q0 (2l+1)) with multiplicity 2l+1.
struct KernelSpectrum {
    std::vector<double> eigenvalues;    // all, descending
    std::vector<int> multiplicities;    // clusters l = 0..lmax_report, then the rest
    int grid_order = 0;
    int lmax_report = 0;
    double q0 = 0.0;
};

inline double kernel_cluster_value(double q0, int l) { return 2.0 / (q0 * (2 * l + 1)); }

inline KernelSpectrum kernel_eigensolve(int grid_order, double q0, int lmax_report) {
    if (!(q0 > 0.0)) throw std::domain_error("kernel_eigensolve: q0 > 0");
    if (lmax_report < 0) throw std::domain_error("kernel_eigensolve: lmax_report >= 0");
    if (grid_order < 2 * (lmax_report + 1))
        throw std::domain_error("kernel_eigensolve: grid_order too small for lmax_report");

    const quadrature::SphereGrid grid = quadrature::sphere_grid(grid_order);
    const int n = static_cast<int>(grid.size());

    std::vector<double> x(n), y(n), z(n), sw(n);
    for (int i = 0; i < n; ++i) {
        const double st = std::sin(grid.nodes[i].theta);
        x[i] = st * std::cos(grid.nodes[i].phi);
        y[i] = st * std::sin(grid.nodes[i].phi);
        z[i] = std::cos(grid.nodes[i].theta);
        sw[i] = std::sqrt(grid.weights[i]);
    }

    // Symmetrized Nystrom matrix B = W^{1/2} K W^{1/2}; the diagonal entry is
    // the row-sum correction that makes the constant function integrate to
    // exactly 4 pi, absorbing the integrable 1/|u-u'| singularity.
    const double scale = 1.0 / (2.0 * M_PI * q0);
    std::vector<double> mat(static_cast<std::size_t>(n) * n, 0.0);
    std::vector<double> rowsum(n, 0.0);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const double dx = x[i] - x[j], dy = y[i] - y[j], dz = z[i] - z[j];
            const double dist = std::sqrt(dx * dx + dy * dy + dz * dz);
            if (dist < 1e-12)
                throw std::runtime_error("kernel_eigensolve: singular-node collision");
            const double inv = 1.0 / dist;
            mat[static_cast<std::size_t>(j) + static_cast<std::size_t>(i) * n] =
                scale * sw[i] * sw[j] * inv;  // lower triangle, column-major
            rowsum[i] += grid.weights[j] * inv;
            rowsum[j] += grid.weights[i] * inv;
        }
    }
    for (int i = 0; i < n; ++i)
        mat[static_cast<std::size_t>(i) * (n + 1)] = scale * (4.0 * M_PI - rowsum[i]);

    std::vector<double> evs(n);
    lapack_int found = 0;
    std::vector<lapack_int> isuppz(2 * static_cast<std::size_t>(n));
    const lapack_int info = LAPACKE_dsyevr(
        LAPACK_COL_MAJOR, 'N', 'A', 'L', n, mat.data(), n, 0.0, 0.0, 0, 0, 0.0,
        &found, evs.data(), nullptr, 1, isuppz.data());
    if (info != 0) throw std::runtime_error("kernel_eigensolve: dsyevr failed");
    evs.resize(found);
    std::sort(evs.begin(), evs.end(), std::greater<>());

    KernelSpectrum spec;
    spec.eigenvalues = evs;
    spec.grid_order = grid_order;
    spec.lmax_report = lmax_report;
    spec.q0 = q0;
    int assigned = 0;
    for (int l = 0; l <= lmax_report; ++l) {
        const double center = kernel_cluster_value(q0, l);
        const double gap_below = center - kernel_cluster_value(q0, l + 1);
        const double gap_above =
            (l == 0) ? gap_below : kernel_cluster_value(q0, l - 1) - center;
        const double window = 0.5 * std::min(gap_below, gap_above);
        int count = 0;
        for (double ev : evs)
            if (std::abs(ev - center) < window) ++count;
        spec.multiplicities.push_back(count);
        assigned += count;
    }
    spec.multiplicities.push_back(static_cast<int>(evs.size()) - assigned);
    return spec;
}

enum class GeneratorAxis { x, y };  // A_x <-> rotation in (u_x u_z), A_y <-> (u_y u_z)

namespace detail {

inline SpherePoint rotate(const SpherePoint& u, double alpha, GeneratorAxis axis) {
    const double c = std::cos(alpha), s = std::sin(alpha);
    if (axis == GeneratorAxis::x)
        return {c * u.ux + s * u.uz, u.uy, -s * u.ux + c * u.uz};
    return {u.ux, c * u.uy + s * u.uz, -s * u.uy + c * u.uz};
}

// Pullback of the rotated sphere wavefunction to momentum space.
inline std::complex<double> phi_rotated(const QuantumNumbers& qn, const MomentumPoint& k,
                                        double alpha, GeneratorAxis axis) {
    const double q0 = eigenstates::energy_level(qn.n).q0;
    const double q2 = k.qx * k.qx + k.qy * k.qy;
    const SpherePoint u = rotate(project(k, q0), alpha, axis);
    return std::sqrt(q0) * std::pow(2.0 * q0 / (q2 + q0 * q0), 1.5) *
           chi_from_phi(qn, u);
}

// Generator applied through numerical momentum derivatives:
//   A_x = (q^2 - q0^2) x^ - 2 q_x (q . rho^) - 3 i q_x,  rho^ = i grad_q.
inline std::complex<double> apply_generator(const QuantumNumbers& qn, const MomentumPoint& k,
                                            GeneratorAxis axis) {
    const double q0 = eigenstates::energy_level(qn.n).q0;
    const double h = 1e-5 * (k.q() + q0);
    auto phi = [&](double qx, double qy) {
        return eigenstates::phi_momentum(qn, {qx, qy});
    };
    const std::complex<double> ddx = (phi(k.qx + h, k.qy) - phi(k.qx - h, k.qy)) / (2.0 * h);
    const std::complex<double> ddy = (phi(k.qx, k.qy + h) - phi(k.qx, k.qy - h)) / (2.0 * h);
    const std::complex<double> i{0.0, 1.0};
    const double q2 = k.qx * k.qx + k.qy * k.qy;
    const std::complex<double> q_dot_rho = i * (k.qx * ddx + k.qy * ddy);
    const double qc = (axis == GeneratorAxis::x) ? k.qx : k.qy;
    const std::complex<double> coord_deriv = (axis == GeneratorAxis::x) ? ddx : ddy;
    return (q2 - q0 * q0) * (i * coord_deriv) - 2.0 * qc * q_dot_rho -
           3.0 * i * qc * phi(k.qx, k.qy);
}

} // namespace detail

/// Compares the alpha-derivative of the pulled-back rotated eigenfunction,
/// scaled by 2 i q0, against the generator applied directly.  The residual
/// shrinks as O(alpha^2); the report tolerance is alpha itself, a loose
/// sanity bound -- convergence-order checks belong to the caller.
inline VerificationReport rotation_generator_check(const QuantumNumbers& qn,
                                                   const MomentumPoint& k, double alpha,
                                                   GeneratorAxis axis = GeneratorAxis::x) {
    if (!(alpha > 0.0)) throw std::domain_error("rotation_generator_check: alpha > 0");
    const double q0 = eigenstates::energy_level(qn.n).q0;
    const std::complex<double> dphi =
        (detail::phi_rotated(qn, k, alpha, axis) - detail::phi_rotated(qn, k, -alpha, axis)) /
        (2.0 * alpha);
    const std::complex<double> lhs = std::complex<double>(0.0, 2.0 * q0) * dphi;
    const std::complex<double> rhs = detail::apply_generator(qn, k, axis);
    return make_report("generator " + std::string(axis == GeneratorAxis::x ? "Ax" : "Ay") +
                           " n=" + std::to_string(qn.n) + " m=" + std::to_string(qn.m) +
                           " alpha=" + std::to_string(alpha),
                       lhs, rhs, alpha, 7);
}

} // namespace kepler2d::fock
