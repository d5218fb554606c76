#pragma once

#include <cstddef>
#include <vector>

namespace mtcorr {

/// Cumulative composite-Simpson prefix integral on a uniform grid.
///
/// Each sub-interval [x_i, x_{i+1}] is integrated with the quadratic through
/// the three nearest samples:
///   first interval:    h (5 f_0 + 8 f_1 - f_2) / 12
///   interior interval: h (-f_{i-1} + 8 f_i + 5 f_{i+1}) / 12
/// Adjacent pairs telescope to the classic Simpson pair h(f+4f+f)/3, so the
/// prefix values coincide with composite Simpson at even nodes and retain
/// O(h^4) global accuracy at odd ones.
///
/// T needs +, -, and scaling by double (arithmetic scalars, Mat2, ...).
template <typename T>
std::vector<T> cumulative_simpson(const std::vector<T>& f, double h) {
    const std::size_t n = f.size();
    std::vector<T> out(n);
    if (n == 0) return out;
    out[0] = T{};
    if (n == 1) return out;
    if (n == 2) { // trapezoid fallback; callers keep >= 3 samples
        out[1] = out[0] + (f[0] + f[1]) * (h / 2.0);
        return out;
    }
    for (std::size_t i = 0; i + 1 < n; ++i) {
        T seg;
        if (i == 0)
            seg = (f[0] * 5.0 + f[1] * 8.0 - f[2]) * (h / 12.0);
        else
            seg = (f[i + 1] * 5.0 + f[i] * 8.0 - f[i - 1]) * (h / 12.0);
        out[i + 1] = out[i] + seg;
    }
    return out;
}

} // namespace mtcorr
