#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "rootapprox/errors.hpp"

namespace rootapprox::detail {

/// Solve A x = b in place by Gaussian elimination with partial pivoting.
/// Pivot magnitude below `pivot_tol` (relative to the largest entry of the
/// row's column) raises SingularSystem.
inline std::vector<double> solve_linear(std::vector<std::vector<double>> a,
                                        std::vector<double> b, double pivot_tol = 1e-12) {
    const std::size_t n = a.size();
    double scale = 0.0;
    for (const auto& row : a)
        for (double v : row) scale = std::max(scale, std::abs(v));
    if (scale == 0.0) raise(errc::singular_system, "zero matrix");
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
        if (std::abs(a[piv][col]) < pivot_tol * scale)
            raise(errc::singular_system, "pivot below threshold in column " + std::to_string(col));
        std::swap(a[piv], a[col]);
        std::swap(b[piv], b[col]);
        for (std::size_t r = col + 1; r < n; ++r) {
            double f = a[r][col] / a[col][col];
            if (f == 0.0) continue;
            for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
            b[r] -= f * b[col];
        }
    }
    std::vector<double> x(n, 0.0);
    for (std::size_t i = n; i-- > 0;) {
        double s = b[i];
        for (std::size_t c = i + 1; c < n; ++c) s -= a[i][c] * x[c];
        x[i] = s / a[i][i];
    }
    return x;
}

} // namespace rootapprox::detail
