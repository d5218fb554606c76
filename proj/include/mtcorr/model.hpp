#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "mtcorr/linalg2.hpp"

namespace mtcorr {

inline constexpr double kPi = std::numbers::pi;

/// Physical input of the model: coupling rate kappa and frequency mismatch
/// delta (both inverse time). Everything downstream depends only on the
/// dimensionless pair (tau, delta/kappa) with tau = 2*kappa*t/pi.
///
/// delta < 0 is rejected: the generator for -delta is -conj of the one for
/// +delta, so all results for negative mismatch follow from the delta >= 0
/// family by conjugation symmetry.
class ModelParams {
  public:
    ModelParams(double kappa, double delta) : kappa_(kappa), delta_(delta) {
        if (!(kappa > 0.0) || !std::isfinite(kappa))
            throw std::invalid_argument("ModelParams: kappa must be positive and finite");
        if (delta < 0.0 || !std::isfinite(delta))
            throw std::invalid_argument("ModelParams: delta must be >= 0 and finite");
    }

    double kappa() const { return kappa_; }
    double delta() const { return delta_; }
    double ratio() const { return delta_ / kappa_; }

    double tau_of_t(double t) const { return 2.0 * kappa_ * t / kPi; }
    double t_of_tau(double tau) const { return kPi * tau / (2.0 * kappa_); }

    friend bool operator==(const ModelParams& a, const ModelParams& b) {
        return a.kappa_ == b.kappa_ && a.delta_ == b.delta_;
    }

  private:
    double kappa_;
    double delta_;
};

/// Generator of the coupled equation of motion for (a, a^dag) in natural
/// time units:
///   M(t) = [[0, -2i kappa e^{-i delta t}], [2i kappa e^{i delta t}, 0]].
/// Its spectral norm is 2*kappa for every t.
inline Mat2 generator_at(const ModelParams& p, double t) {
    const Cplx phase = std::exp(kImag * (p.delta() * t));
    const Cplx c = 2.0 * p.kappa() * kImag;
    return {0.0, -c / phase, c * phase, 0.0};
}

/// Same generator rescaled to dimensionless time, G(tau) = (pi/2kappa) *
/// M(t(tau)). Depends only on (tau, delta/kappa), which keeps Magnus terms
/// bit-identical across parameter pairs sharing those invariants.
inline Mat2 scaled_generator(const ModelParams& p, double tau) {
    const Cplx phase = std::exp(kImag * (p.ratio() * kPi * tau / 2.0));
    const Cplx c = kPi * kImag;
    return {0.0, -c / phase, c * phase, 0.0};
}

/// Magnus convergence check: int_0^t ||M(s)||_2 ds = 2 kappa t = pi * tau
/// must stay below pi, i.e. tau < 1 (boundary excluded).
struct GateReport {
    double tau_end = 0.0;
    double radius = 1.0;    // convergence radius in tau
    double margin = 0.0;    // pi - 2*kappa*t = pi*(1 - tau)
    bool converges = false;
};

inline GateReport convergence_gate(const ModelParams&, double tau_end) {
    if (tau_end < 0.0 || !std::isfinite(tau_end))
        throw std::invalid_argument("convergence_gate: tau_end must be >= 0 and finite");
    GateReport g;
    g.tau_end = tau_end;
    g.margin = kPi * (1.0 - tau_end);
    g.converges = tau_end < 1.0;
    return g;
}

} // namespace mtcorr
