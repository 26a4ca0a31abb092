#pragma once

#include <cmath>
#include <complex>
#include <string>

namespace kepler2d {

/// Structured outcome of one identity check.
/// Invariant: passed  <=>  abs_error <= tolerance * max(1, |rhs|).
struct VerificationReport {
    std::string label;
    std::complex<double> lhs{};
    std::complex<double> rhs{};
    double abs_error = 0.0;
    double rel_error = 0.0;     // abs_error / max(1, |rhs|)
    double tolerance = 0.0;
    bool passed = false;
    long cost = 0;              // integrand/operator evaluations
};

inline VerificationReport make_report(std::string label,
                                      std::complex<double> lhs,
                                      std::complex<double> rhs,
                                      double tolerance,
                                      long cost = 0) {
    VerificationReport r;
    r.label = std::move(label);
    r.lhs = lhs;
    r.rhs = rhs;
    r.abs_error = std::abs(lhs - rhs);
    const double scale = std::max(1.0, std::abs(rhs));
    r.rel_error = r.abs_error / scale;
    r.tolerance = tolerance;
    r.passed = r.abs_error <= tolerance * scale;
    r.cost = cost;
    return r;
}

} // namespace kepler2d
