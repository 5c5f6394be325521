#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

#include "rootapprox/errors.hpp"

namespace rootapprox {

namespace detail {

// Gauss-Kronrod 7-15 pair on [-1, 1]
inline constexpr double gk_nodes[15] = {
    -0.991455371120813, -0.949107912342759, -0.864864423359769, -0.741531185599394,
    -0.586087235467691, -0.405845151377397, -0.207784955007898, 0.0,
    0.207784955007898,  0.405845151377397,  0.586087235467691,  0.741531185599394,
    0.864864423359769,  0.949107912342759,  0.991455371120813};
inline constexpr double gk_wk[15] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728,
    0.204432940075298, 0.190350578064785, 0.169004726639267, 0.140653259715525,
    0.104790010322250, 0.063092092629979, 0.022935322010529};
inline constexpr double gk_wg[7] = {0.129484966168870, 0.279705391489277, 0.381830050505119,
                                    0.417959183673469, 0.381830050505119, 0.279705391489277,
                                    0.129484966168870};

template <class F>
std::pair<double, double> gk15(F&& f, double a, double b) {
    double h = 0.5 * (b - a), c = 0.5 * (a + b);
    double k = 0.0, g = 0.0;
    for (int i = 0; i < 15; ++i) {
        double v = f(c + h * gk_nodes[i]);
        if (!std::isfinite(v)) raise(errc::non_finite, "integrand sample at x = " +
                                                           std::to_string(c + h * gk_nodes[i]));
        k += gk_wk[i] * v;
        if (i % 2 == 1) g += gk_wg[i / 2] * v;
    }
    return {k * h, std::abs(k - g) * h};
}

} // namespace detail

/// Adaptive Gauss-Kronrod quadrature on [a, b], b may be +infinity (mapped to
/// a finite interval by the monotone substitution t = a + u/(1-u)). The
/// worst subinterval is bisected until the summed error estimate is within
/// tol * max(1, |result|); hitting the subdivision cap raises NoConvergence.
template <class F>
double quad_adaptive(F&& f, double a, double b, double tol = 1e-10) {
    if (std::isinf(b)) {
        auto mapped = [&](double u) {
            double t = a + u / (1.0 - u);
            double jac = 1.0 / ((1.0 - u) * (1.0 - u));
            return f(t) * jac;
        };
        return quad_adaptive(mapped, 0.0, 1.0, tol);
    }
    struct interval {
        double a, b, value, err;
        bool operator<(const interval& o) const { return err < o.err; }
    };
    std::priority_queue<interval> q;
    auto [v0, e0] = detail::gk15(f, a, b);
    q.push({a, b, v0, e0});
    double total = v0, toterr = e0;
    const int cap = 4000;
    for (int it = 0; it < cap; ++it) {
        if (toterr <= tol * std::max(1.0, std::abs(total))) return total;
        interval w = q.top();
        q.pop();
        double m = 0.5 * (w.a + w.b);
        auto [v1, e1] = detail::gk15(f, w.a, m);
        auto [v2, e2] = detail::gk15(f, m, w.b);
        total += v1 + v2 - w.value;
        toterr += e1 + e2 - w.err;
        q.push({w.a, m, v1, e1});
        q.push({m, w.b, v2, e2});
    }
    if (toterr <= tol * std::max(1.0, std::abs(total))) return total;
    raise(errc::no_convergence, "quadrature error " + std::to_string(toterr) +
                                    " above tolerance after subdivision cap");
}

} // namespace rootapprox
