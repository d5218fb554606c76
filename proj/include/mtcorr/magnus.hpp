#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "mtcorr/errors.hpp"
#include "mtcorr/linalg2.hpp"
#include "mtcorr/model.hpp"
#include "mtcorr/quadrature.hpp"

namespace mtcorr {

inline constexpr int kNMaxLimit = 15;
inline constexpr int kMinGridPoints = 64;
inline constexpr int kDefaultGridPointsPerUnitTau = 2048;
inline constexpr double kStructureTol = 1e-9;

/// Bernoulli numbers B_0..B_14, convention B_1 = -1/2 (the one under which
/// the Magnus generator recursion below carries weights B_j / j!).
inline constexpr std::array<double, kNMaxLimit> kBernoulli = {
    1.0, -1.0 / 2.0, 1.0 / 6.0, 0.0, -1.0 / 30.0, 0.0, 1.0 / 42.0, 0.0,
    -1.0 / 30.0, 0.0, 5.0 / 66.0, 0.0, -691.0 / 2730.0, 0.0, 7.0 / 6.0};

/// One Magnus order tabulated on the shared grid, with its structure
/// coefficients: even orders are i|C_n| diag(-1, 1), odd orders are
/// |S_n| [[0, e^{i phi_n}], [e^{-i phi_n}, 0]].
struct MagnusTerm {
    int n = 0;
    std::vector<Mat2> samples;     // Omega_n at each grid node
    std::vector<double> abs_coef;  // |C_n| (n even) or |S_n| (n odd)
    std::vector<double> phase;     // phi_n per node (odd n only, else empty)
};

struct MagnusSeries {
    ModelParams params;
    double tau_start = 0.0;
    double tau_end = 0.0;
    int n_max = 0;
    std::vector<double> grid;      // uniform tau nodes, strictly increasing
    std::vector<MagnusTerm> terms; // terms[i] has order i+1

    /// Sum of the first n_terms orders at grid node `idx` (0 = all).
    Mat2 omega_sum_node(std::size_t idx, int n_terms = 0) const {
        const int nu = n_terms <= 0 ? n_max : std::min(n_terms, n_max);
        Mat2 acc;
        for (int n = 1; n <= nu; ++n) acc += terms[static_cast<std::size_t>(n - 1)].samples[idx];
        return acc;
    }
};

namespace detail {

inline std::size_t default_grid_points(double tau_span) {
    const double want = std::ceil(kDefaultGridPointsPerUnitTau * tau_span);
    auto n = static_cast<std::size_t>(std::max(want, double(kMinGridPoints)));
    return n + (n % 2); // even interval count
}

/// Residual of Omega_n against the even/odd structural form, relative to
/// max(1, ||Omega_n||).
inline double structure_residual(const Mat2& m, int n) {
    using std::abs;
    double res;
    if (n % 2 == 0) {
        res = std::max({abs(m.a12), abs(m.a21), abs(m.a11.real()),
                        abs(m.a22.real()), abs(m.a11 + m.a22)});
    } else {
        res = std::max({abs(m.a11), abs(m.a22), abs(m.a21 - std::conj(m.a12))});
    }
    return res / std::max(1.0, spectral_norm(m));
}

/// Magnus orders of dU/dtau = G(tau) U on a uniform grid over
/// [tau_a, tau_b], integrals starting at tau_a with the generator evaluated
/// at absolute scaled time. Order n >= 2 uses the generator recursion
///   S_n^{(1)} = [Omega_{n-1}, G],
///   S_n^{(j)} = sum_{m=1}^{n-j} [Omega_m, S_{n-m}^{(j-1)}],
///   Omega_n   = sum_{j=1}^{n-1} (B_j / j!) \int S_n^{(j)},
/// where every integral is one-dimensional over already-tabulated functions,
/// so the whole series costs O(n_max^2 * grid) matrix operations.
inline MagnusSeries magnus_terms_on_interval(const ModelParams& params, double tau_a,
                                             double tau_b, int n_max,
                                             std::size_t grid_points) {
    if (n_max < 1 || n_max > kNMaxLimit)
        throw std::invalid_argument("magnus_terms: n_max must be in [1, " +
                                    std::to_string(kNMaxLimit) + "]");
    if (grid_points < kMinGridPoints)
        throw std::invalid_argument("magnus_terms: grid_points must be >= " +
                                    std::to_string(kMinGridPoints));
    if (!(tau_b > tau_a) || tau_a < 0.0)
        throw std::invalid_argument("magnus_terms: need 0 <= tau_a < tau_b");
    const GateReport gate = convergence_gate(params, tau_b - tau_a);
    if (!gate.converges)
        throw ConvergenceGateViolation(
            "magnus_terms: interval length tau = " + std::to_string(tau_b - tau_a) +
            " is outside the convergence radius (tau < 1); split the evolution");

    const std::size_t nn = grid_points + 1; // node count
    const double h = (tau_b - tau_a) / static_cast<double>(grid_points);

    MagnusSeries series{params, tau_a, tau_b, n_max, {}, {}};
    series.grid.resize(nn);
    for (std::size_t i = 0; i < nn; ++i)
        series.grid[i] = tau_a + h * static_cast<double>(i);
    series.grid.back() = tau_b;

    std::vector<Mat2> gen(nn);
    for (std::size_t i = 0; i < nn; ++i)
        gen[i] = scaled_generator(params, series.grid[i]);

    // omega[n] and the recursion workspace s[n][j], all tabulated on the grid
    std::vector<std::vector<Mat2>> omega(static_cast<std::size_t>(n_max) + 1);
    omega[1] = cumulative_simpson(gen, h);
    std::vector<std::vector<std::vector<Mat2>>> s(static_cast<std::size_t>(n_max) + 1);

    auto comm_tab = [&nn](const std::vector<Mat2>& a, const std::vector<Mat2>& b) {
        std::vector<Mat2> out(nn);
        for (std::size_t i = 0; i < nn; ++i) out[i] = commutator(a[i], b[i]);
        return out;
    };

    std::vector<double> inv_fact(static_cast<std::size_t>(n_max) + 1, 1.0);
    for (std::size_t j = 1; j < inv_fact.size(); ++j)
        inv_fact[j] = inv_fact[j - 1] / static_cast<double>(j);

    for (int n = 2; n <= n_max; ++n) {
        auto& sn = s[static_cast<std::size_t>(n)];
        sn.resize(static_cast<std::size_t>(n)); // sn[j], j = 1..n-1
        sn[1] = comm_tab(omega[static_cast<std::size_t>(n - 1)], gen);
        for (int j = 2; j <= n - 1; ++j) {
            std::vector<Mat2> acc(nn);
            for (int m = 1; m <= n - j; ++m) {
                const auto& sm = s[static_cast<std::size_t>(n - m)][static_cast<std::size_t>(j - 1)];
                const auto& om = omega[static_cast<std::size_t>(m)];
                for (std::size_t i = 0; i < nn; ++i)
                    acc[i] += commutator(om[i], sm[i]);
            }
            sn[static_cast<std::size_t>(j)] = std::move(acc);
        }
        std::vector<Mat2> integrand(nn);
        for (int j = 1; j <= n - 1; ++j) {
            const double w = kBernoulli[static_cast<std::size_t>(j)] * inv_fact[static_cast<std::size_t>(j)];
            if (w == 0.0) continue;
            const auto& snj = sn[static_cast<std::size_t>(j)];
            for (std::size_t i = 0; i < nn; ++i) integrand[i] += snj[i] * w;
        }
        omega[static_cast<std::size_t>(n)] = cumulative_simpson(integrand, h);
    }

    series.terms.reserve(static_cast<std::size_t>(n_max));
    for (int n = 1; n <= n_max; ++n) {
        MagnusTerm term;
        term.n = n;
        term.samples = std::move(omega[static_cast<std::size_t>(n)]);
        term.abs_coef.resize(nn);
        if (n % 2 == 1) term.phase.resize(nn);
        for (std::size_t i = 0; i < nn; ++i) {
            const Mat2& m = term.samples[i];
            const double res = structure_residual(m, n);
            if (res > kStructureTol)
                throw StructureViolation("magnus_terms: order " + std::to_string(n) +
                                         " off-structure residual " + std::to_string(res));
            if (n % 2 == 0) {
                term.abs_coef[i] = std::abs(m.a11.imag());
            } else {
                term.abs_coef[i] = std::abs(m.a12);
                term.phase[i] = std::atan2(m.a12.imag(), m.a12.real());
            }
        }
        series.terms.push_back(std::move(term));
    }
    return series;
}

} // namespace detail

/// Magnus orders Omega_1..Omega_n_max on a uniform grid over [0, tau_end].
/// grid_points = 0 picks the default resolution (2048 intervals per unit
/// tau, at least 64).
inline MagnusSeries magnus_terms(const ModelParams& params, double tau_end, int n_max,
                                 std::size_t grid_points = 0) {
    if (grid_points == 0) grid_points = detail::default_grid_points(tau_end);
    return detail::magnus_terms_on_interval(params, 0.0, tau_end, n_max, grid_points);
}

/// One row of the Fig.-1-style norm table.
struct NormMapPoint {
    double tau = 0.0;
    double ratio = 0.0; // delta/kappa
    int n = 0;
    double norm = 0.0; // ||Omega_n(tau)||_2
};

/// Spectral norms ||Omega_n(tau)||_2 over a (tau x delta/kappa) grid for the
/// requested orders. Row order is deterministic and tau-major:
/// tau, then ratio, then n. All requested tau must satisfy the gate.
inline std::vector<NormMapPoint> term_norm_map(double kappa, const std::vector<double>& taus,
                                               const std::vector<double>& ratios,
                                               const std::vector<int>& n_list,
                                               std::size_t grid_points = 0) {
    double tau_max = 0.0;
    for (double t : taus) tau_max = std::max(tau_max, t);
    int n_need = 1;
    for (int n : n_list) n_need = std::max(n_need, n);

    // one series per ratio; norms for every (tau, n) read off its grid
    std::vector<MagnusSeries> series;
    series.reserve(ratios.size());
    for (double r : ratios)
        series.push_back(magnus_terms(ModelParams(kappa, r * kappa), tau_max, n_need,
                                      grid_points));

    std::vector<NormMapPoint> out;
    out.reserve(taus.size() * ratios.size() * n_list.size());
    for (double tau : taus) {
        for (std::size_t ri = 0; ri < ratios.size(); ++ri) {
            for (int n : n_list) {
                const auto& term = series[ri].terms[static_cast<std::size_t>(n - 1)];
                // nearest node: taus are expected to be grid-aligned, but an
                // off-node request only shifts the norm by O(h)
                const double rel = (tau - series[ri].tau_start) /
                                   (series[ri].tau_end - series[ri].tau_start);
                const auto last = series[ri].grid.size() - 1;
                auto idx = static_cast<std::size_t>(
                    std::llround(rel * static_cast<double>(last)));
                idx = std::min(idx, last);
                out.push_back({tau, ratios[ri], n, spectral_norm(term.samples[idx])});
            }
        }
    }
    return out;
}

} // namespace mtcorr
