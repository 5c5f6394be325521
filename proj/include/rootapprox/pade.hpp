#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "rootapprox/detail/linsolve.hpp"
#include "rootapprox/errors.hpp"
#include "rootapprox/rational.hpp"
#include "rootapprox/series.hpp"

namespace rootapprox {

/// Rational approximant N(u)/D(u) in the build variable u = x^var_pow,
/// denominator normalized to constant term 1.
struct pade_approximant {
    std::vector<double> num_coeffs; // length M+1
    std::vector<double> den_coeffs; // length N+1, den_coeffs[0] == 1
    rational var_pow{1};

    int m_deg() const { return static_cast<int>(num_coeffs.size()) - 1; }
    int n_deg() const { return static_cast<int>(den_coeffs.size()) - 1; }
};

namespace detail {

/// Coefficients c_0..c_n of a series on the integer grid of its own variable.
/// The series must start at exponent 0 with unit step (after the caller's
/// choice of build variable).
inline std::vector<double> integer_grid_coeffs(const generalized_series& s, int n) {
    if (s.lead() != rational(0) || s.step() != rational(1))
        raise(errc::inconsistent_powers,
              "Pade needs a series on the integer grid starting at order 0 (lead " +
                  s.lead().str() + ", step " + s.step().str() + ")");
    if (s.has_log())
        raise(errc::inconsistent_powers, "Pade cannot match logarithmic terms");
    if (s.order() < n)
        raise(errc::validation_error, "series supplies " + std::to_string(s.order() + 1) +
                                          " coefficients, need " + std::to_string(n + 1));
    std::vector<double> c;
    for (int i = 0; i <= n; ++i) c.push_back(s.coeff_at_slot(i));
    return c;
}

inline double eval_poly(const std::vector<double>& c, double u) {
    double v = 0.0;
    for (std::size_t i = c.size(); i-- > 0;) v = v * u + c[i];
    return v;
}

} // namespace detail

/// Accuracy-through-order Pade P_{M/N} from M+N+1 series coefficients:
/// the linear system for the denominator, then the numerator by convolution.
inline pade_approximant pade_from_series(const generalized_series& s, int m, int n,
                                         rational var_pow = rational(1)) {
    auto c = detail::integer_grid_coeffs(s, m + n);
    pade_approximant p;
    p.var_pow = var_pow;
    std::vector<double> q(static_cast<std::size_t>(n) + 1, 0.0);
    q[0] = 1.0;
    if (n > 0) {
        // sum_{j=1}^{N} q_j c_{m+i-j} = -c_{m+i},  i = 1..N
        std::vector<std::vector<double>> a(static_cast<std::size_t>(n),
                                           std::vector<double>(static_cast<std::size_t>(n), 0.0));
        std::vector<double> b(static_cast<std::size_t>(n), 0.0);
        for (int i = 1; i <= n; ++i) {
            for (int j = 1; j <= n; ++j) {
                int idx = m + i - j;
                a[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] =
                    idx >= 0 ? c[static_cast<std::size_t>(idx)] : 0.0;
            }
            b[static_cast<std::size_t>(i - 1)] = -c[static_cast<std::size_t>(m + i)];
        }
        auto x = detail::solve_linear(std::move(a), std::move(b));
        for (int j = 1; j <= n; ++j) q[static_cast<std::size_t>(j)] = x[static_cast<std::size_t>(j - 1)];
    }
    std::vector<double> num(static_cast<std::size_t>(m) + 1, 0.0);
    for (int i = 0; i <= m; ++i)
        for (int j = 0; j <= std::min(i, n); ++j)
            num[static_cast<std::size_t>(i)] +=
                q[static_cast<std::size_t>(j)] * c[static_cast<std::size_t>(i - j)];
    p.num_coeffs = std::move(num);
    p.den_coeffs = std::move(q);
    return p;
}

/// Large-side data for a two-point build: the target behaves as
/// amp * u^{M-N} (1 + corr_1/u + corr_2/u^2 + ...) in the build variable.
struct infinity_side {
    double amp = 1.0;
    std::vector<double> corrections;
    /// offsets of the corrections on the original grid; any non-integer
    /// entry marks the data unreachable for a rational function
    std::vector<rational> offsets;
};

/// Two-point Pade: p accuracy-through-order conditions at u = 0 and q
/// conditions at u = infinity (amplitude first, then corrections), with
/// p + q = M + N + 1. Non-integer correction offsets or a large-side power
/// not equal to M - N raise InconsistentPowers.
inline pade_approximant two_point_pade(const generalized_series& small, int m, int n, int p,
                                       int q, const infinity_side& large,
                                       rational var_pow = rational(1),
                                       std::optional<rational> large_pow = std::nullopt) {
    const int k = m + n + 1;
    if (p + q != k) raise(errc::validation_error, "split p + q must equal M + N + 1");
    if (q > 0) {
        if (large_pow && *large_pow != rational(m - n))
            raise(errc::inconsistent_powers, "target behaves as u^" + large_pow->str() +
                                                 " but P_{M/N} gives u^" +
                                                 std::to_string(m - n));
        for (std::size_t i = 0; i < large.offsets.size() && i + 1 < static_cast<std::size_t>(q);
             ++i)
            if (!large.offsets[i].is_integer())
                raise(errc::inconsistent_powers,
                      "large-side correction at non-integer offset " + large.offsets[i].str());
    }
    if (q == 0) return pade_from_series(small, m, n, var_pow);
    auto c = detail::integer_grid_coeffs(small, p > 0 ? p - 1 : 0);
    // unknowns: num_0..num_M, den_1..den_N
    std::vector<std::vector<double>> a(static_cast<std::size_t>(k),
                                       std::vector<double>(static_cast<std::size_t>(k), 0.0));
    std::vector<double> b(static_cast<std::size_t>(k), 0.0);
    int row = 0;
    for (int i = 0; i < p; ++i, ++row) {
        // num_i - sum_{j=1}^{min(i,N)} den_j c_{i-j} = c_i
        if (i <= m) a[static_cast<std::size_t>(row)][static_cast<std::size_t>(i)] = 1.0;
        for (int j = 1; j <= std::min(i, n); ++j)
            a[static_cast<std::size_t>(row)][static_cast<std::size_t>(m + j)] =
                -c[static_cast<std::size_t>(i - j)];
        b[static_cast<std::size_t>(row)] = c[static_cast<std::size_t>(i)];
    }
    // infinity: num_{M-l} = amp * sum_{i=0}^{l} d_i den_{N-(l-i)}, d_0 = 1
    std::vector<double> d{1.0};
    for (double v : large.corrections) d.push_back(v);
    for (int l = 0; l < q; ++l, ++row) {
        double rhs = 0.0;
        if (m - l >= 0)
            a[static_cast<std::size_t>(row)][static_cast<std::size_t>(m - l)] += 1.0;
        for (int i = 0; i <= l && i < static_cast<int>(d.size()); ++i) {
            int jd = n - (l - i);
            if (jd < 0) continue;
            if (jd == 0)
                rhs += large.amp * d[static_cast<std::size_t>(i)];
            else
                a[static_cast<std::size_t>(row)][static_cast<std::size_t>(m + jd)] -=
                    large.amp * d[static_cast<std::size_t>(i)];
        }
        b[static_cast<std::size_t>(row)] = rhs;
    }
    auto x = detail::solve_linear(std::move(a), std::move(b));
    pade_approximant out;
    out.var_pow = var_pow;
    out.num_coeffs.assign(x.begin(), x.begin() + (m + 1));
    out.den_coeffs.assign(static_cast<std::size_t>(n) + 1, 0.0);
    out.den_coeffs[0] = 1.0;
    for (int j = 1; j <= n; ++j) out.den_coeffs[static_cast<std::size_t>(j)] = x[static_cast<std::size_t>(m + j)];
    return out;
}

/// Rational evaluation in the build variable. A denominator within 1e-14
/// (relative to its term magnitudes) of zero raises PoleAt.
inline double evaluate_pade(const pade_approximant& p, double x) {
    if (x < 0.0) raise(errc::validation_error, "evaluate_pade needs x >= 0");
    double u = p.var_pow == rational(1) ? x : std::pow(x, p.var_pow.to_double());
    double den = detail::eval_poly(p.den_coeffs, u);
    double mag = 0.0, upow = 1.0;
    for (double qc : p.den_coeffs) {
        mag += std::abs(qc) * std::abs(upow);
        upow *= u;
    }
    if (std::abs(den) <= 1e-14 * std::max(mag, 1e-300))
        raise(errc::pole_at, "denominator vanishes at x = " + std::to_string(x));
    return detail::eval_poly(p.num_coeffs, u) / den;
}

/// Real denominator roots on (0, xmax], located by sign scan plus bisection
/// to 1e-10 in the original variable.
inline std::vector<double> poles_on_ray(const pade_approximant& p, double xmax) {
    std::vector<double> roots;
    auto den = [&](double x) {
        double u = p.var_pow == rational(1) ? x : std::pow(x, p.var_pow.to_double());
        return detail::eval_poly(p.den_coeffs, u);
    };
    const int n = 4000;
    double prev_x = xmax * 1e-12, prev_v = den(prev_x);
    for (int i = 1; i <= n; ++i) {
        double x = xmax * i / n;
        double v = den(x);
        if (v == 0.0) {
            roots.push_back(x);
        } else if (prev_v * v < 0.0) {
            double lo = prev_x, hi = x;
            while (hi - lo > 1e-10) {
                double mid = 0.5 * (lo + hi);
                if (den(lo) * den(mid) <= 0.0)
                    hi = mid;
                else
                    lo = mid;
            }
            roots.push_back(0.5 * (lo + hi));
        }
        prev_x = x;
        prev_v = v;
    }
    return roots;
}

} // namespace rootapprox
