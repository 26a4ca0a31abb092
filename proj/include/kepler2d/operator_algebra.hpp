#pragma once

// Grid discretization of the Hamiltonian, angular momentum, and the two
// conserved-vector components, with residual norms for their commutation
// relations.  Second-order central stencils on a cell-centered grid; the
// outermost ring of every derived field is zeroed and residual norms exclude
// both the outer third of the grid and a core disk around the Coulomb
// singularity, where the 1/rho factors defeat polynomial truncation
// estimates.

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "kepler2d/eigenstates.hpp"
#include "kepler2d/verification.hpp"

namespace kepler2d::ops {

using Complex = std::complex<double>;

/// Complex field sampled on a cell-centered square grid.  Nodes sit at
/// origin_offset + (i,j)*h, so rho = 0 is never a node.
struct GridField {
    int nx = 0, ny = 0;
    double h = 0.0;
    std::array<double, 2> origin_offset{};  // coordinates of node (0,0)
    std::vector<Complex> values;

    GridField() = default;
    GridField(int nx_, int ny_, double h_, std::array<double, 2> offset)
        : nx(nx_), ny(ny_), h(h_), origin_offset(offset),
          values(static_cast<std::size_t>(nx_) * ny_, Complex{}) {
        if (nx < 8 || ny < 8) throw std::domain_error("GridField: grid too small");
        if (!(h > 0.0)) throw std::domain_error("GridField: h > 0");
    }

    Complex& at(int i, int j) { return values[static_cast<std::size_t>(i) * ny + j]; }
    const Complex& at(int i, int j) const {
        return values[static_cast<std::size_t>(i) * ny + j];
    }
    double x(int i) const { return origin_offset[0] + i * h; }
    double y(int j) const { return origin_offset[1] + j * h; }
    double rho(int i, int j) const { return std::hypot(x(i), y(j)); }
};

/// Square cell-centered grid covering [-half_extent, half_extent]^2.
inline GridField make_grid(int n, double half_extent = 12.0) {
    const double h = 2.0 * half_extent / n;
    return GridField(n, n, h, {-half_extent + 0.5 * h, -half_extent + 0.5 * h});
}

/// Samples of the bound-state eigenfunction on a grid.
inline GridField eigenstate_field(const eigenstates::QuantumNumbers& qn, int n,
                                  double half_extent = 12.0) {
    GridField f = make_grid(n, half_extent);
    for (int i = 0; i < f.nx; ++i)
        for (int j = 0; j < f.ny; ++j) {
            const double xx = f.x(i), yy = f.y(j);
            f.at(i, j) = eigenstates::psi_real(
                qn, {std::hypot(xx, yy), std::atan2(yy, xx)});
        }
    return f;
}

/// Off-center Gaussian, the mandatory no-special-symmetry test field.
inline GridField gaussian_field(int n, double half_extent = 12.0, double x0 = 1.3,
                                double y0 = -0.8, double sigma = 1.5) {
    GridField f = make_grid(n, half_extent);
    const double inv = 1.0 / (2.0 * sigma * sigma);
    for (int i = 0; i < f.nx; ++i)
        for (int j = 0; j < f.ny; ++j) {
            const double dx = f.x(i) - x0, dy = f.y(j) - y0;
            f.at(i, j) = std::exp(-(dx * dx + dy * dy) * inv);
        }
    return f;
}

enum class OperatorId { H, Lz, Ax, Ay };

namespace detail {

inline GridField like(const GridField& f) {
    return GridField(f.nx, f.ny, f.h, f.origin_offset);
}

inline GridField ddx(const GridField& f) {
    GridField g = like(f);
    const double s = 1.0 / (2.0 * f.h);
    for (int i = 1; i + 1 < f.nx; ++i)
        for (int j = 0; j < f.ny; ++j) g.at(i, j) = s * (f.at(i + 1, j) - f.at(i - 1, j));
    return g;
}

inline GridField ddy(const GridField& f) {
    GridField g = like(f);
    const double s = 1.0 / (2.0 * f.h);
    for (int i = 0; i < f.nx; ++i)
        for (int j = 1; j + 1 < f.ny; ++j) g.at(i, j) = s * (f.at(i, j + 1) - f.at(i, j - 1));
    return g;
}

inline GridField laplacian(const GridField& f) {
    GridField g = like(f);
    const double s = 1.0 / (f.h * f.h);
    for (int i = 1; i + 1 < f.nx; ++i)
        for (int j = 1; j + 1 < f.ny; ++j)
            g.at(i, j) = s * (f.at(i + 1, j) + f.at(i - 1, j) + f.at(i, j + 1) +
                              f.at(i, j - 1) - 4.0 * f.at(i, j));
    return g;
}

inline GridField mul_x(const GridField& f) {
    GridField g = like(f);
    for (int i = 0; i < f.nx; ++i)
        for (int j = 0; j < f.ny; ++j) g.at(i, j) = f.x(i) * f.at(i, j);
    return g;
}

inline GridField mul_y(const GridField& f) {
    GridField g = like(f);
    for (int i = 0; i < f.nx; ++i)
        for (int j = 0; j < f.ny; ++j) g.at(i, j) = f.y(j) * f.at(i, j);
    return g;
}

inline GridField axpy(Complex a, const GridField& x, const GridField& y) {
    GridField g = like(x);
    for (std::size_t k = 0; k < g.values.size(); ++k)
        g.values[k] = a * x.values[k] + y.values[k];
    return g;
}

inline GridField scaled(Complex a, const GridField& x) {
    GridField g = like(x);
    for (std::size_t k = 0; k < g.values.size(); ++k) g.values[k] = a * x.values[k];
    return g;
}

inline GridField qx(const GridField& f) { return scaled(Complex(0, -1), ddx(f)); }
inline GridField qy(const GridField& f) { return scaled(Complex(0, -1), ddy(f)); }

inline GridField q_dot_rho(const GridField& f) {
    return axpy(1.0, qx(mul_x(f)), qy(mul_y(f)));
}

} // namespace detail

inline GridField apply_operator(OperatorId op, const GridField& f) {
    using namespace detail;
    switch (op) {
        case OperatorId::H: {
            GridField g = laplacian(f);
            for (int i = 0; i < f.nx; ++i)
                for (int j = 0; j < f.ny; ++j)
                    g.at(i, j) = -g.at(i, j) - 2.0 / f.rho(i, j) * f.at(i, j);
            return g;
        }
        case OperatorId::Lz:
            // -i (x d/dy - y d/dx)
            return axpy(-1.0, scaled(Complex(0, 1), mul_x(ddy(f))),
                        scaled(Complex(0, 1), mul_y(ddx(f))));
        case OperatorId::Ax: {
            // q^2 (x f) + x (H f) - 2 q_x (q.rho f) - 3 i q_x f
            GridField t = scaled(-1.0, laplacian(mul_x(f)));
            t = axpy(1.0, mul_x(apply_operator(OperatorId::H, f)), t);
            t = axpy(-2.0, qx(q_dot_rho(f)), t);
            return axpy(Complex(0, -3), qx(f), t);
        }
        case OperatorId::Ay: {
            GridField t = scaled(-1.0, laplacian(mul_y(f)));
            t = axpy(1.0, mul_y(apply_operator(OperatorId::H, f)), t);
            t = axpy(-2.0, qy(q_dot_rho(f)), t);
            return axpy(Complex(0, -3), qy(f), t);
        }
    }
    throw std::logic_error("apply_operator: unknown operator");
}

/// max |f| on the outermost ring over max |f| everywhere: fields feeding the
/// residual checks should keep this below ~1e-10 or boundary truncation
/// contaminates the interior norms.
inline double boundary_ratio(const GridField& f) {
    double edge = 0.0, all = 0.0;
    for (int i = 0; i < f.nx; ++i)
        for (int j = 0; j < f.ny; ++j) {
            const double a = std::abs(f.at(i, j));
            all = std::max(all, a);
            if (i == 0 || j == 0 || i == f.nx - 1 || j == f.ny - 1)
                edge = std::max(edge, a);
        }
    return all > 0.0 ? edge / all : 0.0;
}

struct ResidualOptions {
    double boundary_fraction = 1.0 / 3.0;  // cut this fraction of the box (outer ring)
    double core_radius = 1.5;              // exclude rho < core_radius
};

/// RMS of |f| over the interior window (outer `boundary_fraction` of the box
/// and the core disk excluded).
inline double interior_rms(const GridField& f, const ResidualOptions& opt = {}) {
    const int kx = static_cast<int>(f.nx * opt.boundary_fraction / 2.0);
    const int ky = static_cast<int>(f.ny * opt.boundary_fraction / 2.0);
    double sum = 0.0;
    long count = 0;
    for (int i = kx; i < f.nx - kx; ++i)
        for (int j = ky; j < f.ny - ky; ++j) {
            if (f.rho(i, j) < opt.core_radius) continue;
            sum += std::norm(f.at(i, j));
            ++count;
        }
    if (count == 0) throw std::domain_error("interior_rms: empty interior window");
    return std::sqrt(sum / count);
}

enum class CommutatorRhs {
    zero,            // [H, Lz], [H, Ax], [H, Ay]
    i_ay,            // [Lz, Ax] = i Ay
    minus_i_ax,      // [Lz, Ay] = -i Ax
    minus_4i_lz_h,   // [Ax, Ay] = -4 i Lz H
};

/// || (A B - B A - rhs) f || / || f ||  on the interior window.
inline double commutator_residual(OperatorId a, OperatorId b, CommutatorRhs expected,
                                  const GridField& f, const ResidualOptions& opt = {}) {
    using namespace detail;
    // A B f - B A f
    GridField r = axpy(-1.0, apply_operator(b, apply_operator(a, f)),
                       apply_operator(a, apply_operator(b, f)));
    switch (expected) {
        case CommutatorRhs::zero:
            break;
        case CommutatorRhs::i_ay:
            r = axpy(Complex(0, -1), apply_operator(OperatorId::Ay, f), r);
            break;
        case CommutatorRhs::minus_i_ax:
            r = axpy(Complex(0, 1), apply_operator(OperatorId::Ax, f), r);
            break;
        case CommutatorRhs::minus_4i_lz_h:
            r = axpy(Complex(0, 4),
                     apply_operator(OperatorId::Lz, apply_operator(OperatorId::H, f)), r);
            break;
    }
    return interior_rms(r, opt) / interior_rms(f, opt);
}

/// Interior relative residual of (Ax^2 + Ay^2 - H(4 Lz^2 + 1) - 4) f.
inline double a_squared_residual(const GridField& f, const ResidualOptions& opt = {}) {
    using namespace detail;
    const GridField ax2 = apply_operator(OperatorId::Ax, apply_operator(OperatorId::Ax, f));
    const GridField ay2 = apply_operator(OperatorId::Ay, apply_operator(OperatorId::Ay, f));
    const GridField lz2 =
        apply_operator(OperatorId::Lz, apply_operator(OperatorId::Lz, f));
    const GridField hterm = apply_operator(OperatorId::H, axpy(4.0, lz2, f));
    GridField r = axpy(1.0, ax2, ay2);
    r = axpy(-1.0, hterm, r);
    r = axpy(-4.0, f, r);
    return interior_rms(r, opt) / interior_rms(f, opt);
}

/// Exact integer identity n(n+1) = -(1/4 + 1/E_n) with E_n = -4/(2n+1)^2:
/// -(1/4 + 1/E) = ((2n+1)^2 - 1)/4 = n^2 + n.  Zero tolerance.
inline VerificationReport j_squared_identity(int n) {
    if (n < 0) throw std::domain_error("j_squared_identity: n >= 0");
    const std::int64_t big = 2 * static_cast<std::int64_t>(n) + 1;
    const std::int64_t lhs = static_cast<std::int64_t>(n) * (n + 1);
    const std::int64_t rhs4 = big * big - 1;  // 4 * rhs, exactly divisible
    const std::int64_t rhs = rhs4 / 4;
    VerificationReport rep;
    rep.label = "j-squared n=" + std::to_string(n);
    rep.lhs = static_cast<double>(lhs);
    rep.rhs = static_cast<double>(rhs);
    rep.abs_error = static_cast<double>(std::abs(lhs - rhs));
    rep.rel_error = rep.abs_error / std::max<double>(1.0, static_cast<double>(rhs));
    rep.tolerance = 0.0;
    rep.passed = (lhs == rhs) && (rhs4 % 4 == 0);
    rep.cost = 0;
    return rep;
}

} // namespace kepler2d::ops
