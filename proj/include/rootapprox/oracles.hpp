#pragma once

#include <cmath>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "rootapprox/errors.hpp"
#include "rootapprox/quadrature.hpp"
#include "rootapprox/rational.hpp"

namespace rootapprox {

inline constexpr double pi = 3.14159265358979323846;

// ---------------------------------------------------------------------------
// reference functions

namespace detail {

/// (sin t - t cos t)/t^3, series form below t = 0.5 where the direct form
/// cancels catastrophically.
inline double scattering_integrand_root(double t) {
    if (t < 0.5) {
        // sum (-1)^(m+1) 2m t^(2m-2)/(2m+1)!
        double t2 = t * t, term = 1.0 / 3.0, s = term;
        double fact = 6.0; // (2m+1)! at m=1
        for (int m = 2; m <= 8; ++m) {
            fact *= (2 * m) * (2 * m + 1);
            term = (m % 2 ? 1.0 : -1.0) * 2 * m * std::pow(t2, m - 1) / fact;
            s += term;
        }
        return s;
    }
    return std::sin(t) / (t * t * t) - std::cos(t) / (t * t);
}

} // namespace detail

/// Scattering-length integral: int_0^x (sin t / t^3 - cos t / t^2)^2 dt,
/// monotone increasing to pi/15.
inline double scattering_S(double x, double tol = 1e-10) {
    if (x == 0.0) return 0.0;
    auto f = [](double t) {
        double g = detail::scattering_integrand_root(t);
        return g * g;
    };
    return quad_adaptive(f, 0.0, x, tol);
}

/// Third-order Debye function D(3, x) = 3/x^3 int_0^x t^3/(e^t - 1) dt.
inline double debye3(double x, double tol = 1e-10) {
    if (x == 0.0) return 1.0;
    auto f = [](double t) {
        if (t < 1e-6) return t * t * (1.0 - t / 2.0 + t * t / 12.0);
        return t * t * t / std::expm1(t);
    };
    return 3.0 * quad_adaptive(f, 0.0, x, tol) / (x * x * x);
}

/// Zero-order Fermi-Dirac integral F(0, x) = ln(1 + e^x), overflow-safe.
inline double fermi_dirac0(double x) {
    return std::max(x, 0.0) + std::log1p(std::exp(-std::abs(x)));
}

/// Fekete-Szego bound mapped to z in [0, inf): F(z) = f(z/(1+z)) with
/// f(x) = 1 + 2 exp(-2x/(1-x)); the substitution collapses to 1 + 2 e^{-2z}.
inline double fekete(double z) { return 1.0 + 2.0 * std::exp(-2.0 * z); }

/// Zero-dimensional phi^4 partition function
/// I(x) = pi^{-1/2} int_{-inf}^{inf} exp(-p^2 - x p^4) dp.
inline double phi4_I(double x, double tol = 1e-10) {
    auto f = [x](double p) { return std::exp(-p * p - x * p * p * p * p); };
    return 2.0 * quad_adaptive(f, 0.0, std::numeric_limits<double>::infinity(), tol) /
           std::sqrt(pi);
}

/// NJL-model mass function f(x) = x [ sqrt(1+x^2) - x^2 ln((1+sqrt(1+x^2))/x) ].
inline double njl_f(double x) {
    if (x == 0.0) return 0.0;
    double s = std::sqrt(1.0 + x * x);
    return x * (s - x * x * std::log((1.0 + s) / x));
}

/// Gori-Giorgi fit for the 2D electron-gas correlation energy, used as the
/// numerical reference for that case.
inline double gori_giorgi_2d(double rs) {
    constexpr double A0 = -0.1925, B0 = 0.0863136, C0 = 0.057234, D0 = 0.003362896;
    constexpr double E0 = 1.0022, F0 = -0.02069, G0 = 0.34, H0 = 0.01747;
    double den = E0 * rs + F0 * std::pow(rs, 1.5) + G0 * rs * rs + H0 * rs * rs * rs;
    return A0 + (B0 * rs + C0 * rs * rs + D0 * rs * rs * rs) * std::log1p(1.0 / den);
}

// ---------------------------------------------------------------------------
// exact small-x data for the Debye case

/// Bernoulli numbers B_0..B_n by the defining recurrence
/// sum_{j=0}^{m} C(m+1, j) B_j = 0.
inline std::vector<rational> bernoulli_numbers(int n) {
    if (n > 20) raise(errc::validation_error, "Bernoulli range capped at 20 (exact int64)");
    std::vector<rational> b;
    for (int m = 0; m <= n; ++m) {
        if (m == 0) {
            b.emplace_back(1);
            continue;
        }
        // sum_{j<m} C(m+1, j) B_j, then B_m = -sum / C(m+1, m)
        rational s{0};
        rational binom{1};
        for (int j = 0; j < m; ++j) {
            s += binom * b[static_cast<std::size_t>(j)];
            binom = binom * rational(m + 1 - j) / rational(j + 1);
        }
        b.push_back(-s / rational(m + 1));
    }
    return b;
}

/// Ratio-series coefficients of D(3, x) at 0 through the given order:
/// -3x/8, then even terms 3 B_{2k} / ((2k+3)(2k)!) x^{2k}; odd orders past
/// the first vanish. Exact rationals fit through order 16.
inline std::vector<rational> debye_small_coeffs(int order) {
    if (order > 16)
        raise(errc::validation_error, "exact Debye coefficients capped at order 16");
    std::vector<rational> out(static_cast<std::size_t>(order) + 1, rational(0));
    if (order >= 1) out[1] = rational(-3, 8);
    auto b = bernoulli_numbers(order);
    rational fact{1};
    for (int k = 1; 2 * k <= order; ++k) {
        fact = fact * rational(2 * k - 1) * rational(2 * k); // (2k)!
        out[static_cast<std::size_t>(2 * k)] =
            rational(3) * b[static_cast<std::size_t>(2 * k)] / (rational(2 * k + 3) * fact);
    }
    return out;
}

// ---------------------------------------------------------------------------
// error scans

struct scan_grid {
    double lo = 0.01;
    double hi = 100.0;
    int n = 400; // log-spaced points
    std::string describe() const {
        return "[" + std::to_string(lo) + ", " + std::to_string(hi) + "] log-spaced, " +
               std::to_string(n) + " points";
    }
};

struct scan_point {
    double x = 0.0;
    double approx = 0.0;
    double oracle = 0.0;
    double rel_err = 0.0;
};

/// Max relative deviation over a scan grid, with the argmax location.
/// Per-point domain errors are collected, not fatal.
struct error_report {
    double max_rel_err = 0.0;
    double argmax_x = 0.0;
    std::string grid;
    std::vector<scan_point> per_point;
    std::vector<std::string> point_errors;
};

inline error_report error_scan(const std::function<double(double)>& approx_eval,
                               const std::function<double(double)>& oracle_eval,
                               const scan_grid& grid) {
    error_report rep;
    rep.grid = grid.describe();
    double llo = std::log(grid.lo), lhi = std::log(grid.hi);
    for (int i = 0; i < grid.n; ++i) {
        double x = std::exp(llo + (lhi - llo) * i / (grid.n - 1));
        try {
            double a = approx_eval(x);
            double o = oracle_eval(x);
            double denom = std::max(std::abs(o), 1e-300);
            double rel = std::abs(a - o) / denom;
            rep.per_point.push_back({x, a, o, rel});
            if (rel > rep.max_rel_err) {
                rep.max_rel_err = rel;
                rep.argmax_x = x;
            }
        } catch (const error& e) {
            rep.point_errors.push_back("x = " + std::to_string(x) + ": " + e.what());
        }
    }
    return rep;
}

} // namespace rootapprox
