#pragma once

// Independent finite-volume oracle for the bound-state spectrum: solves the
// radial equation
//   -(1/rho) d/drho (rho dR/drho) + (m^2/rho^2 - 2/rho) R = E R
// on a cell-centered grid without using the closed-form answer.  The flux
// discretization is symmetrized by the diagonal sqrt(rho_i * cell_i)
// congruence, giving a symmetric tridiagonal eigenproblem with a naturally
// vanishing flux through rho = 0.

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include <lapacke.h>

#include "kepler2d/verification.hpp"

namespace kepler2d::radial {

struct RadialGrid {
    enum class Spacing { uniform, log };

    double r_max = 100.0;
    int n_points = 200000;
    Spacing spacing = Spacing::uniform;
    double offset = 0.0;  // first node position; uniform: h/2, log: first cell center

    static RadialGrid uniform(int n_points, double r_max) {
        if (n_points < 16) throw std::domain_error("RadialGrid: too few points");
        if (!(r_max > 0.0)) throw std::domain_error("RadialGrid: r_max > 0");
        RadialGrid g;
        g.r_max = r_max;
        g.n_points = n_points;
        g.spacing = Spacing::uniform;
        g.offset = 0.5 * r_max / n_points;
        return g;
    }

    /// Geometric cell widths starting at first_cell; spacing grades smoothly
    /// out to r_max.  Useful when near-origin resolution matters more than
    /// the tail.
    static RadialGrid logarithmic(int n_points, double r_max, double first_cell) {
        if (n_points < 16) throw std::domain_error("RadialGrid: too few points");
        if (!(r_max > 0.0) || !(first_cell > 0.0) || !(first_cell < r_max / n_points * 10))
            throw std::domain_error("RadialGrid: bad log-grid parameters");
        RadialGrid g;
        g.r_max = r_max;
        g.n_points = n_points;
        g.spacing = Spacing::log;
        g.offset = 0.5 * first_cell;
        return g;
    }

    /// Cell faces f_0 = 0 < f_1 < ... < f_N = r_max.
    std::vector<double> faces() const {
        std::vector<double> f(static_cast<std::size_t>(n_points) + 1);
        if (spacing == Spacing::uniform) {
            const double h = r_max / n_points;
            for (int i = 0; i <= n_points; ++i) f[i] = i * h;
        } else {
            // widths w0 * g^i with sum = r_max; solve for g by bisection
            const double w0 = 2.0 * offset;
            double lo = 1.0 + 1e-15, hi = 1.5;
            auto total = [&](double g) {
                return w0 * (std::pow(g, n_points) - 1.0) / (g - 1.0);
            };
            while (total(hi) < r_max) hi *= 1.5;
            for (int it = 0; it < 200; ++it) {
                const double mid = 0.5 * (lo + hi);
                (total(mid) < r_max ? lo : hi) = mid;
            }
            const double g = 0.5 * (lo + hi);
            f[0] = 0.0;
            double w = w0;
            for (int i = 1; i <= n_points; ++i) {
                f[i] = f[i - 1] + w;
                w *= g;
            }
            f[n_points] = r_max;
        }
        return f;
    }
};

struct RadialSpectrum {
    int m = 0;
    std::vector<double> energies;           // ascending
    std::vector<int> node_counts;           // sign changes of each radial state
    std::vector<double> radii;              // cell centers
    std::vector<std::vector<double>> radial_functions;  // R_k(rho_i), L2(rho drho)-normalized
};

/// Lowest n_states eigenpairs for azimuthal channel m.  The k-th state
/// approximates the shell n = k + |m| with E_n = -1/(n+1/2)^2.  When
/// drift_tolerance > 0, the solve is repeated on a half-resolution grid and a
/// relative eigenvalue drift above the tolerance raises an error (grid too
/// coarse for the requested accuracy).
inline RadialSpectrum solve_radial(int m, int n_states, const RadialGrid& grid,
                                   double drift_tolerance = 0.0) {
    if (n_states < 1) throw std::domain_error("solve_radial: n_states >= 1");
    const int am = m < 0 ? -m : m;

    const std::vector<double> f = grid.faces();
    const int n = grid.n_points;
    if (n_states > n / 4) throw std::domain_error("solve_radial: too many states for grid");

    std::vector<double> rho(n), cellw(n), weight(n);
    for (int i = 0; i < n; ++i) {
        rho[i] = 0.5 * (f[i] + f[i + 1]);
        cellw[i] = f[i + 1] - f[i];
        weight[i] = rho[i] * cellw[i];
    }

    std::vector<double> diag(n), off(n - 1);
    for (int i = 0; i < n; ++i)
        diag[i] = (am * am) / (rho[i] * rho[i]) - 2.0 / rho[i];
    for (int i = 0; i + 1 < n; ++i) {
        const double flux = f[i + 1] / (rho[i + 1] - rho[i]);  // interior face conductance
        diag[i] += flux / weight[i];
        diag[i + 1] += flux / weight[i + 1];
        off[i] = -flux / std::sqrt(weight[i] * weight[i + 1]);
    }

    std::vector<double> evs(n_states);
    std::vector<double> vecs(static_cast<std::size_t>(n) * n_states);
    lapack_int found = 0;
    std::vector<lapack_int> isuppz(2 * static_cast<std::size_t>(n_states));
    const lapack_int info = LAPACKE_dstevr(
        LAPACK_COL_MAJOR, 'V', 'I', n, diag.data(), off.data(), 0.0, 0.0, 1, n_states,
        0.0, &found, evs.data(), vecs.data(), n, isuppz.data());
    if (info != 0 || found != n_states)
        throw std::runtime_error("solve_radial: dstevr failed");

    RadialSpectrum out;
    out.m = m;
    out.energies.assign(evs.begin(), evs.end());
    out.radii = rho;
    out.radial_functions.resize(n_states);
    for (int k = 0; k < n_states; ++k) {
        const double* v = vecs.data() + static_cast<std::size_t>(k) * n;
        // v is unit-norm in the congruence variables; R_i = v_i / sqrt(w_i)
        // is then L2(rho drho)-normalized.
        std::vector<double>& R = out.radial_functions[k];
        R.resize(n);
        double vmax = 0.0;
        for (int i = 0; i < n; ++i) {
            R[i] = v[i] / std::sqrt(weight[i]);
            vmax = std::max(vmax, std::abs(v[i]));
        }
        // sign changes above the noise floor; the exponential tail underflows
        // into sign jitter that must not count as nodes
        const double floor = 1e-9 * vmax;
        int nodes = 0;
        double prev = 0.0;
        for (int i = 0; i < n; ++i) {
            if (std::abs(v[i]) < floor) continue;
            if (prev * v[i] < 0.0) ++nodes;
            prev = v[i];
        }
        out.node_counts.push_back(nodes);
    }

    if (drift_tolerance > 0.0) {
        RadialGrid half = grid;
        half.n_points = n / 2;
        half.offset *= (grid.spacing == RadialGrid::Spacing::uniform) ? 2.0 : 1.0;
        const RadialSpectrum coarse = solve_radial(m, n_states, half, 0.0);
        for (int k = 0; k < n_states; ++k) {
            const double drift = std::abs(coarse.energies[k] - out.energies[k]) /
                                 std::abs(out.energies[k]);
            if (drift > drift_tolerance)
                throw std::runtime_error(
                    "solve_radial: grid too coarse, eigenvalue drift " +
                    std::to_string(drift) + " for state " + std::to_string(k));
        }
    }
    return out;
}

/// Collects the shell-n energy from every |m| <= n and reports the spread
/// relative to the mean.  Reported lhs is the normalized spread; rhs = 0.
inline VerificationReport degeneracy_check(int n, const RadialGrid& grid, double tol) {
    if (n < 0) throw std::domain_error("degeneracy_check: n >= 0");
    double lo = 0.0, hi = 0.0, mean = 0.0;
    for (int m = 0; m <= n; ++m) {
        const RadialSpectrum s = solve_radial(m, n - m + 1, grid);
        const double e = s.energies[static_cast<std::size_t>(n - m)];
        if (m == 0) {
            lo = hi = e;
        } else {
            lo = std::min(lo, e);
            hi = std::max(hi, e);
        }
        mean += e;
    }
    mean /= (n + 1);
    const double spread = (hi - lo) / std::abs(mean);
    return make_report("degeneracy n=" + std::to_string(n), spread, 0.0, tol, n + 1);
}

} // namespace kepler2d::radial
