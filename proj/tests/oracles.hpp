#pragma once

// Test-only oracles, independent of the implementation paths they check:
// Rodrigues-formula Legendre evaluation through exact polynomial
// coefficients, the Laguerre binomial series, the Bessel power series in
// long double, and Bessel's integral representation via direct quadrature.

#include <cmath>
#include <vector>

namespace oracles {

inline double binomial(int n, int k) {
    if (k < 0 || k > n) return 0.0;
    double r = 1.0;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// Coefficients of P_n(x) in the monomial basis:
//   P_n(x) = 2^{-n} sum_k (-1)^k C(n,k) C(2n-2k,n) x^{n-2k}
inline std::vector<double> legendre_coeffs(int n) {
    std::vector<double> c(n + 1, 0.0);
    const double scale = std::pow(2.0, -n);
    for (int k = 0; 2 * k <= n; ++k) {
        const double term = scale * ((k % 2) ? -1.0 : 1.0) * binomial(n, k) *
                            binomial(2 * n - 2 * k, n);
        c[n - 2 * k] = term;
    }
    return c;
}

// P_n^m by the Rodrigues route: differentiate the polynomial m times, then
// multiply by (1-x^2)^{m/2}.  No Condon-Shortley factor.
inline double assoc_legendre_rodrigues(int n, int m, double x) {
    std::vector<double> c = legendre_coeffs(n);
    for (int d = 0; d < m; ++d) {
        for (std::size_t i = 0; i + 1 < c.size(); ++i) c[i] = (i + 1) * c[i + 1];
        c.pop_back();
        if (c.empty()) return 0.0;
    }
    double p = 0.0;
    for (std::size_t i = c.size(); i-- > 0;) p = p * x + c[i];
    return p * std::pow((1.0 - x) * (1.0 + x), 0.5 * m);
}

// L_k^a(x) = sum_i (-1)^i C(k+a, k-i) x^i / i!   (long double: the alternating
// sum cancels several digits for x near 10)
inline double assoc_laguerre_series(int k, int a, double x) {
    long double sum = 0.0L;
    long double xpow = 1.0L;
    long double ifact = 1.0L;
    for (int i = 0; i <= k; ++i) {
        if (i > 0) {
            xpow *= x;
            ifact *= i;
        }
        sum += ((i % 2) ? -1.0L : 1.0L) * static_cast<long double>(binomial(k + a, k - i)) *
               xpow / ifact;
    }
    return static_cast<double>(sum);
}

// Power series for J_m in long double; reliable for x up to ~20.
inline double bessel_j_series_ld(int m, double x) {
    const long double half = 0.5L * x;
    long double term = 1.0L;
    for (int k = 1; k <= m; ++k) term *= half / k;
    long double sum = term;
    const long double h2 = -half * half;
    for (int k = 1; k < 200; ++k) {
        term *= h2 / (static_cast<long double>(k) * (m + k));
        sum += term;
        if (std::abs(static_cast<double>(term)) < 1e-22 * std::abs(static_cast<double>(sum)) + 1e-320)
            break;
    }
    return static_cast<double>(sum);
}

// Bessel's integral J_m(x) = (1/pi) int_0^pi cos(m t - x sin t) dt by plain
// composite Simpson; valid at any x, used to cross-check the large-x branch.
inline double bessel_j_integral(int m, double x, int panels = 20000) {
    const double h = M_PI / panels;
    auto f = [&](double t) { return std::cos(m * t - x * std::sin(t)); };
    double sum = f(0.0) + f(M_PI);
    for (int i = 1; i < panels; ++i) sum += 2.0 * (1 + i % 2) * f(i * h);
    return sum * h / (3.0 * M_PI);
}

// Locates the first positive root of J_0 by bisection over the power series.
inline double j0_first_root_bisect() {
    double lo = 2.0, hi = 3.0;
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (bessel_j_series_ld(0, lo) * bessel_j_series_ld(0, mid) <= 0.0)
            hi = mid;
        else
            lo = mid;
    }
    return 0.5 * (lo + hi);
}

} // namespace oracles
