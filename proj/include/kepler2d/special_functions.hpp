#pragma once

// Self-contained special-function kernel: associated Legendre/Ferrers
// functions, associated Laguerre polynomials, Bessel functions of the first
// kind, and spherical harmonics.  Everything here is pure arithmetic with no
// shared mutable state; all functions are safe to call from any thread.

#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace kepler2d::specfun {

// Upward recurrences are validated up to this degree; factorial ratios switch
// to log-space evaluation above it and accuracy degrades gradually.
inline constexpr int max_stable_degree = 32;

// (n-|m|)! / (n+|m|)!  ==  1 / ((n-|m|+1)(n-|m|+2)...(n+|m|))
inline double factorial_ratio(int n, int m) {
    if (n < 0) throw std::domain_error("factorial_ratio: n < 0");
    const int am = m < 0 ? -m : m;
    if (am > n) throw std::domain_error("factorial_ratio: |m| > n");
    if (n + am <= max_stable_degree * 2) {
        long double r = 1.0L;
        for (int k = n - am + 1; k <= n + am; ++k) r /= k;
        return static_cast<double>(r);
    }
    return std::exp(std::lgamma(n - am + 1.0) - std::lgamma(n + am + 1.0));
}

/// Associated Legendre function P_n^m(x) = (1-x^2)^{m/2} d^m P_n(x)/dx^m.
/// Derivative convention: no Condon-Shortley factor, so P_1^1(0) = +1.
inline double assoc_legendre(int n, int m, double x) {
    if (n < 0 || m < 0 || m > n)
        throw std::domain_error("assoc_legendre: need 0 <= m <= n");
    if (std::abs(x) > 1.0)
        throw std::domain_error("assoc_legendre: |x| > 1");

    // P_m^m = (2m-1)!! (1-x^2)^{m/2}, then upward in degree.
    double pmm = 1.0;
    if (m > 0) {
        const double s = std::sqrt((1.0 - x) * (1.0 + x));
        double dfact = 1.0;
        for (int k = 1; k <= m; ++k) {
            pmm *= dfact * s;
            dfact += 2.0;
        }
    }
    if (n == m) return pmm;
    double pmmp1 = x * (2 * m + 1) * pmm;
    if (n == m + 1) return pmmp1;
    double pll = 0.0;
    for (int ll = m + 2; ll <= n; ++ll) {
        pll = (x * (2 * ll - 1) * pmmp1 - (ll + m - 1) * pmm) / (ll - m);
        pmm = pmmp1;
        pmmp1 = pll;
    }
    return pll;
}

/// Ferrers function (-1)^m P_n^m(x): the Condon-Shortley-signed form used
/// inside spherical harmonics and the momentum-space eigenfunctions.
inline double ferrers_legendre(int n, int m, double x) {
    const double p = assoc_legendre(n, m, x);
    return (m & 1) ? -p : p;
}

/// Associated Laguerre polynomial L_k^alpha(x), L_k^alpha(0) = C(k+alpha, k).
inline double assoc_laguerre(int k, int alpha, double x) {
    if (k < 0 || alpha < 0) throw std::domain_error("assoc_laguerre: negative index");
    if (x < 0.0) throw std::domain_error("assoc_laguerre: x < 0");
    double l0 = 1.0;
    if (k == 0) return l0;
    double l1 = 1.0 + alpha - x;
    for (int j = 2; j <= k; ++j) {
        const double l2 = ((2 * j - 1 + alpha - x) * l1 - (j - 1 + alpha) * l0) / j;
        l0 = l1;
        l1 = l2;
    }
    return l1;
}

namespace detail {

// Power series around x = 0; no cancellation trouble for x <= 2.
inline double bessel_j_series(int m, double x) {
    const double half = 0.5 * x;
    double term = 1.0;
    for (int k = 1; k <= m; ++k) term *= half / k;
    double sum = term;
    const double h2 = -half * half;
    for (int k = 1; k < 64; ++k) {
        term *= h2 / (k * (m + k));
        sum += term;
        if (std::abs(term) < 1e-18 * std::abs(sum) + 1e-300) break;
    }
    return sum;
}

// Miller's backward recurrence with normalization 1 = J_0 + 2 sum J_{2k}.
inline double bessel_j_miller(int m, double x) {
    const int top = std::max(m, static_cast<int>(x));
    // start far enough above the turning point that the seeded error has
    // decayed below machine precision by the time the recursion reaches m
    int start = top + 24 + static_cast<int>(6.0 * std::sqrt(static_cast<double>(top)));
    if (start % 2) ++start;

    double jp = 0.0;        // J_{k+1} (unnormalized)
    double jc = 1e-30;      // J_k
    double norm = 0.0;
    double jm_val = 0.0;
    for (int k = start; k >= 1; --k) {
        const double jmn = (2.0 * k / x) * jc - jp;
        jp = jc;
        jc = jmn;
        if (std::abs(jc) > 1e250) {         // rescale to dodge overflow
            jc *= 1e-250;
            jp *= 1e-250;
            norm *= 1e-250;
            jm_val *= 1e-250;
        }
        if (k - 1 == m) jm_val = jc;        // jc now holds J_{k-1}
        if ((k - 1) > 0 && (k - 1) % 2 == 0) norm += 2.0 * jc;
    }
    norm += jc;                              // jc == J_0
    if (m == 0) jm_val = jc;
    return jm_val / norm;
}

} // namespace detail

/// Bessel function of the first kind J_m(x), x >= 0; negative orders via
/// J_{-m}(x) = (-1)^m J_m(x).
inline double bessel_j(int m, double x) {
    if (x < 0.0) throw std::domain_error("bessel_j: x < 0");
    const int am = m < 0 ? -m : m;
    double v;
    if (x == 0.0)
        v = (am == 0) ? 1.0 : 0.0;
    else if (x <= 2.0)
        v = detail::bessel_j_series(am, x);
    else
        v = detail::bessel_j_miller(am, x);
    if (m < 0 && (am & 1)) v = -v;
    return v;
}

/// k-th positive zero of J_m (k >= 1): McMahon's expansion refined by one
/// Newton step.  Accurate enough for lobe boundaries of oscillatory
/// quadrature; not a general-purpose root finder.
inline double bessel_j_zero(int m, int k) {
    if (k < 1) throw std::domain_error("bessel_j_zero: k < 1");
    const int am = m < 0 ? -m : m;
    const double beta = (k + 0.5 * am - 0.25) * M_PI;
    const double mu = 4.0 * am * am;
    const double b2 = 8.0 * beta;
    double z = beta - (mu - 1.0) / b2
               - 4.0 * (mu - 1.0) * (7.0 * mu - 31.0) / (3.0 * b2 * b2 * b2);
    const double deriv = 0.5 * (bessel_j(am - 1, z) - bessel_j(am + 1, z));
    if (deriv != 0.0) z -= bessel_j(am, z) / deriv;
    return z;
}

/// Unit-modulus phase (-i)^{|m|}; exactly one of {1, -i, -1, i}.
struct PhaseFactor {
    std::complex<double> value;
};

inline PhaseFactor phase_factor(int m) {
    static constexpr std::array<std::complex<double>, 4> table = {{
        {1.0, 0.0}, {0.0, -1.0}, {-1.0, 0.0}, {0.0, 1.0}}};
    const int am = m < 0 ? -m : m;
    return PhaseFactor{table[am % 4]};
}

/// (-i)^m for signed integer m, exact.
inline std::complex<double> minus_i_pow(int m) {
    static constexpr std::array<std::complex<double>, 4> table = {{
        {1.0, 0.0}, {0.0, -1.0}, {-1.0, 0.0}, {0.0, 1.0}}};
    return table[((m % 4) + 4) % 4];
}

/// Spherical harmonic with the Ferrers Legendre function and the extra
/// (-i)^{|m|} phase that matches the momentum-eigenfunction convention:
///   Y_l^m = (-i)^{|m|} sqrt((2l+1)/(4pi) (l-|m|)!/(l+|m|)!)
///           * (-1)^{|m|} P_l^{|m|}(cos theta) e^{i m phi}
inline std::complex<double> spherical_harmonic(int l, int m, double theta, double phi) {
    const int am = m < 0 ? -m : m;
    if (l < 0 || am > l)
        throw std::domain_error("spherical_harmonic: need |m| <= l");
    const double norm = std::sqrt((2 * l + 1) / (4.0 * M_PI) * factorial_ratio(l, am));
    const double plm = ferrers_legendre(l, am, std::cos(theta));
    const std::complex<double> azim = std::polar(1.0, m * phi);
    return phase_factor(m).value * norm * plm * azim;
}

} // namespace kepler2d::specfun
