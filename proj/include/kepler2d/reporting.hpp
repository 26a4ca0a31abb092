#pragma once

// Report serialization: deterministic float formatting (17 significant
// digits, lowercase scientific), CSV writers with fixed column order, and
// JSON conversions.  Two runs with identical inputs must produce
// byte-identical files.

#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "kepler2d/fock_sphere.hpp"
#include "kepler2d/integral_identities.hpp"
#include "kepler2d/radial_solver.hpp"
#include "kepler2d/verification.hpp"

namespace kepler2d::reporting {

/// 17-significant-digit lowercase scientific; round-trips any double.
inline std::string format_float(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.16e", v);
    return buf;
}

inline nlohmann::json to_json(const VerificationReport& r) {
    return nlohmann::json{{"label", r.label},
                          {"lhs_re", r.lhs.real()},
                          {"lhs_im", r.lhs.imag()},
                          {"rhs_re", r.rhs.real()},
                          {"rhs_im", r.rhs.imag()},
                          {"abs_error", r.abs_error},
                          {"rel_error", r.rel_error},
                          {"tolerance", r.tolerance},
                          {"passed", r.passed},
                          {"cost", r.cost}};
}

inline nlohmann::json to_json(const fock::KernelSpectrum& s) {
    return nlohmann::json{{"grid_order", s.grid_order},
                          {"q0", s.q0},
                          {"lmax_report", s.lmax_report},
                          {"eigenvalues", s.eigenvalues},
                          {"multiplicities", s.multiplicities}};
}

inline void write_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << contents;
}

/// integral_scan.csv: n, m, x, lhs, rhs, abs_error, rel_error, passed, cost
inline std::string integral_scan_csv(const std::vector<identities::IntegralScanRow>& rows) {
    std::string out = "n,m,x,lhs,rhs,abs_error,rel_error,passed,cost\n";
    for (const auto& r : rows) {
        out += std::to_string(r.n) + ',' + std::to_string(r.m) + ',' +
               format_float(r.x) + ',' + format_float(r.report.lhs.real()) + ',' +
               format_float(r.report.rhs.real()) + ',' +
               format_float(r.report.abs_error) + ',' +
               format_float(r.report.rel_error) + ',' +
               (r.report.passed ? "1" : "0") + ',' + std::to_string(r.report.cost) + '\n';
    }
    return out;
}

struct SpectrumRow {
    int n = 0, m = 0;
    double e_computed = 0.0, e_exact = 0.0, rel_error = 0.0;
};

/// spectrum.csv: n, m, E_computed, E_exact, rel_error
inline std::string spectrum_csv(const std::vector<SpectrumRow>& rows) {
    std::string out = "n,m,E_computed,E_exact,rel_error\n";
    for (const auto& r : rows)
        out += std::to_string(r.n) + ',' + std::to_string(r.m) + ',' +
               format_float(r.e_computed) + ',' + format_float(r.e_exact) + ',' +
               format_float(r.rel_error) + '\n';
    return out;
}

struct CommutatorRow {
    std::string identity;
    std::string field;
    double h = 0.0;
    double residual = 0.0;
};

/// commutators.csv: identity, field, h, residual
inline std::string commutators_csv(const std::vector<CommutatorRow>& rows) {
    std::string out = "identity,field,h,residual\n";
    for (const auto& r : rows)
        out += r.identity + ',' + r.field + ',' + format_float(r.h) + ',' +
               format_float(r.residual) + '\n';
    return out;
}

/// Minimal SVG heat map of log10(scaled error) over the (n, x) scan plane;
/// a diagnostic artifact, never an input to pass/fail decisions.
inline std::string integral_scan_svg(const std::vector<identities::IntegralScanRow>& rows,
                                     int n_max, const std::vector<double>& xs) {
    const int cell = 28, margin = 40;
    const int w = margin + cell * static_cast<int>(xs.size()) + 10;
    const int h = margin + cell * (n_max + 1) + 10;
    std::string svg = "<svg xmlns='http://www.w3.org/2000/svg' width='" +
                      std::to_string(w) + "' height='" + std::to_string(h) + "'>\n";
    for (int n = 0; n <= n_max; ++n) {
        for (std::size_t xi = 0; xi < xs.size(); ++xi) {
            double worst = 0.0;
            for (const auto& r : rows)
                if (r.n == n && r.x == xs[xi]) worst = std::max(worst, r.report.rel_error);
            // map log10(err) in [-16, -6] to a blue->red ramp
            double t = (std::log10(std::max(worst, 1e-16)) + 16.0) / 10.0;
            t = std::min(1.0, std::max(0.0, t));
            const int red = static_cast<int>(255 * t);
            const int blue = static_cast<int>(255 * (1.0 - t));
            svg += "<rect x='" + std::to_string(margin + cell * static_cast<int>(xi)) +
                   "' y='" + std::to_string(margin + cell * n) + "' width='" +
                   std::to_string(cell - 2) + "' height='" + std::to_string(cell - 2) +
                   "' fill='rgb(" + std::to_string(red) + ",60," + std::to_string(blue) +
                   ")'><title>n=" + std::to_string(n) + " x=" + format_float(xs[xi]) +
                   " err=" + format_float(worst) + "</title></rect>\n";
        }
    }
    svg += "</svg>\n";
    return svg;
}

} // namespace kepler2d::reporting
