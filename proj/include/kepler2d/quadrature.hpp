#pragma once

// Integration engines behind every verification:
//  - adaptive Gauss-Kronrod (7,15) bisection on finite intervals,
//  - semi-infinite oscillatory integrals of Bessel type (lobe partition at
//    Bessel zeros + Wynn epsilon acceleration of the partial sums),
//  - a Gauss-Legendre x trapezoid product rule on the unit sphere.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <type_traits>
#include <vector>

#include "kepler2d/special_functions.hpp"

namespace kepler2d::quadrature {

template <class T>
struct QuadResult {
    T value{};
    double abs_error_estimate = 0.0;
    long n_evals = 0;
    bool converged = false;
};

namespace detail {

// Kronrod-15 abscissae (positive half) and weights; Gauss-7 weights embedded
// at the odd-index nodes.
inline constexpr std::array<double, 8> gk_x = {
    0.9914553711208126392068547, 0.9491079123427585245261897,
    0.8648644233597690727897128, 0.7415311855993944398638648,
    0.5860872354676911302941448, 0.4058451513773971669066064,
    0.2077849550078984676006894, 0.0};
inline constexpr std::array<double, 8> gk_wk = {
    0.0229353220105292249637320, 0.0630920926299785532907007,
    0.1047900103222501838398763, 0.1406532597155259187451896,
    0.1690047266392679028265834, 0.1903505780647854099132564,
    0.2044329400752988924141620, 0.2094821410847278280129992};
inline constexpr std::array<double, 4> gk_wg = {
    0.1294849661688696932706114, 0.2797053914892766679014678,
    0.3818300505051189449503698, 0.4179591836734693877551020};

template <class F>
auto gk15(F&& f, double a, double b, double& err, double& resabs) {
    using V = std::invoke_result_t<F, double>;
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    V kron = V{};
    V gauss = V{};
    resabs = 0.0;
    for (int i = 0; i < 8; ++i) {
        const V fl = f(c - h * gk_x[i]);
        const V fr = (i == 7) ? fl : f(c + h * gk_x[i]);
        const V pair = (i == 7) ? fl : V{fl + fr};
        kron += gk_wk[i] * pair;
        if (i % 2 == 1 && i < 7) gauss += gk_wg[i / 2] * pair;
        if (i == 7) gauss += gk_wg[3] * fl;
        resabs += gk_wk[i] * ((i == 7) ? std::abs(fl) : std::abs(fl) + std::abs(fr));
    }
    kron *= h;
    gauss *= h;
    resabs *= std::abs(h);
    err = std::abs(kron - gauss) + 50.0 * 1e-17 * resabs;
    return kron;
}

} // namespace detail

/// Adaptive bisection with an embedded Gauss-Kronrod error estimate.
/// `tol` is absolute; subdivision also stops once the estimate falls below a
/// machine-level fraction of |value|, so large-magnitude integrands terminate
/// at their relative accuracy floor.
template <class F>
auto integrate_finite(F&& f, double a, double b, double tol, int max_intervals = 4000) {
    using V = std::invoke_result_t<F, double>;
    if (!(a < b)) throw std::domain_error("integrate_finite: need a < b");
    if (!(tol > 0.0)) throw std::domain_error("integrate_finite: need tol > 0");

    struct Seg {
        double a, b, err;
        V val;
        bool splittable;
    };
    auto by_err = [](const Seg& l, const Seg& r) {
        return (l.splittable ? l.err : -1.0) < (r.splittable ? r.err : -1.0);
    };

    QuadResult<V> out;
    std::vector<Seg> segs;
    double resabs;
    double err0;
    const V v0 = detail::gk15(f, a, b, err0, resabs);
    out.n_evals = 15;
    segs.push_back({a, b, err0, v0, true});
    double total_err = err0;
    V total_val = v0;

    auto good_enough = [&] {
        return total_err <= std::max(tol, 1e-14 * std::abs(total_val));
    };
    while (!good_enough() && static_cast<int>(segs.size()) < max_intervals) {
        std::pop_heap(segs.begin(), segs.end(), by_err);
        Seg worst = segs.back();
        const double mid = 0.5 * (worst.a + worst.b);
        if (!worst.splittable || mid <= worst.a || mid >= worst.b) {
            // nothing splittable left at better than roundoff width
            worst.splittable = false;
            segs.back() = worst;
            std::push_heap(segs.begin(), segs.end(), by_err);
            break;
        }
        segs.pop_back();
        double el, er;
        const V vl = detail::gk15(f, worst.a, mid, el, resabs);
        const V vr = detail::gk15(f, mid, worst.b, er, resabs);
        out.n_evals += 30;
        total_err += el + er - worst.err;
        total_val += vl + vr - worst.val;
        segs.push_back({worst.a, mid, el, vl, true});
        std::push_heap(segs.begin(), segs.end(), by_err);
        segs.push_back({mid, worst.b, er, vr, true});
        std::push_heap(segs.begin(), segs.end(), by_err);
    }
    // resum from segments for a roundoff-clean total
    total_val = V{};
    total_err = 0.0;
    for (const Seg& s : segs) {
        total_val += s.val;
        total_err += s.err;
    }
    out.value = total_val;
    out.abs_error_estimate = total_err;
    out.converged = good_enough();
    return out;
}

namespace detail {

// Wynn epsilon table over a window of partial sums; returns the entry of the
// highest even column, the standard accelerated estimate.
inline double wynn_epsilon(const std::vector<double>& s) {
    const std::size_t n = s.size();
    std::vector<double> prev(n + 1, 0.0);
    std::vector<double> cur(s);
    double best = s.back();
    for (std::size_t k = 1; k < n; ++k) {
        std::vector<double> nxt(cur.size() - 1);
        for (std::size_t j = 0; j + 1 < cur.size(); ++j) {
            const double d = cur[j + 1] - cur[j];
            nxt[j] = (std::abs(d) < 1e-300) ? prev[j + 1] : prev[j + 1] + 1.0 / d;
        }
        prev = std::move(cur);
        cur = std::move(nxt);
        if (k % 2 == 0 && !cur.empty() && std::isfinite(cur.back())) best = cur.back();
    }
    return best;
}

} // namespace detail

/// Integrates  int_0^inf f(y) dy  where f contains a factor
/// J_{bessel_order}(frequency * sqrt(y)) and otherwise decays at least as
/// y^{-3/2}.  Strategy: substitute t = sqrt(y), split [0,inf) at the zeros of
/// J_m(frequency*t), integrate each lobe adaptively and accelerate the
/// alternating partial sums with the Wynn epsilon algorithm.  Plain
/// truncation of the tail cannot reach the tolerances used here.
template <class F>
QuadResult<double> integrate_oscillatory_semiinfinite(F&& f, int bessel_order,
                                                      double frequency, double tol,
                                                      int max_lobes = 300) {
    if (!(frequency > 0.0))
        throw std::domain_error(
            "integrate_oscillatory_semiinfinite: frequency must be > 0 "
            "(handle the frequency = 0 limit analytically)");
    if (!(tol > 0.0)) throw std::domain_error("integrate_oscillatory_semiinfinite: tol > 0");

    const int am = bessel_order < 0 ? -bessel_order : bessel_order;
    auto g = [&](double t) { return 2.0 * t * f(t * t); };

    const double lobe_tol = std::max(0.01 * tol, 1e-16);
    QuadResult<double> out;
    std::vector<double> partials;
    partials.reserve(64);
    double running = 0.0;
    double quad_err = 0.0;
    double est = 0.0, est_prev = 0.0;
    bool have_prev = false;

    double t_lo = 0.0;
    for (int k = 1; k <= max_lobes; ++k) {
        const double t_hi = specfun::bessel_j_zero(am, k) / frequency;
        auto lob = integrate_finite(g, t_lo, t_hi, lobe_tol);
        out.n_evals += lob.n_evals;
        quad_err += lob.abs_error_estimate;
        running += lob.value;
        t_lo = t_hi;
        partials.push_back(running);

        const std::size_t window = std::min<std::size_t>(partials.size(), 40);
        est = detail::wynn_epsilon(
            std::vector<double>(partials.end() - window, partials.end()));
        if (have_prev && k > 9) {
            const double delta = std::abs(est - est_prev);
            if (delta < 0.1 * tol) {
                out.value = est;
                out.abs_error_estimate = delta + quad_err;
                out.converged = out.abs_error_estimate <= tol;
                if (out.converged) return out;
            }
        }
        est_prev = est;
        have_prev = true;
    }
    out.value = est;
    out.abs_error_estimate = std::abs(est - est_prev) + quad_err;
    out.converged = false;  // acceleration stagnated before the lobe budget ran out
    return out;
}

/// Product quadrature rule on the unit sphere: `order` Gauss-Legendre nodes in
/// cos(theta) times 2*`order` uniform nodes in phi.  Integrates spherical
/// harmonic products Y_l Y_l'^* exactly for l + l' <= 2*order - 1.
struct SphereGrid {
    struct Node {
        double theta, phi;
    };
    std::vector<Node> nodes;
    std::vector<double> weights;
    int order = 0;

    std::size_t size() const { return nodes.size(); }
};

namespace detail {

// Gauss-Legendre nodes/weights on [-1,1] by Newton iteration on P_n.
inline void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w) {
    x.resize(n);
    w.resize(n);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double z = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1);
            }
            pp = n * (z * p0 - p1) / (z * z - 1.0);
            const double dz = p0 / pp;
            z -= dz;
            if (std::abs(dz) < 1e-15) break;
        }
        x[i] = -z;
        x[n - 1 - i] = z;
        w[i] = 2.0 / ((1.0 - z * z) * pp * pp);
        w[n - 1 - i] = w[i];
    }
}

} // namespace detail

inline SphereGrid sphere_grid(int order) {
    if (order < 1) throw std::domain_error("sphere_grid: order >= 1");
    std::vector<double> x, w;
    detail::gauss_legendre(order, x, w);
    SphereGrid grid;
    grid.order = order;
    const int nphi = 2 * order;
    const double wphi = M_PI / order;
    grid.nodes.reserve(static_cast<std::size_t>(order) * nphi);
    grid.weights.reserve(static_cast<std::size_t>(order) * nphi);
    for (int i = 0; i < order; ++i) {
        const double theta = std::acos(x[i]);
        for (int j = 0; j < nphi; ++j) {
            grid.nodes.push_back({theta, (j + 0.5) * wphi});
            grid.weights.push_back(w[i] * wphi);
        }
    }
    return grid;
}

} // namespace kepler2d::quadrature
