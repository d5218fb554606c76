#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>

namespace mtcorr {

using Cplx = std::complex<double>;

inline constexpr Cplx kImag{0.0, 1.0};

/// Complex 2x2 matrix with value semantics. No invariants are imposed here;
/// traceless / unitary / Bogoliubov sub-families are asserted by callers.
struct Mat2 {
    Cplx a11{}, a12{}, a21{}, a22{};

    static Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
    static Mat2 zero() { return {}; }
    static Mat2 diag(Cplx d1, Cplx d2) { return {d1, 0.0, 0.0, d2}; }

    Mat2& operator+=(const Mat2& o) {
        a11 += o.a11; a12 += o.a12; a21 += o.a21; a22 += o.a22;
        return *this;
    }
    Mat2& operator-=(const Mat2& o) {
        a11 -= o.a11; a12 -= o.a12; a21 -= o.a21; a22 -= o.a22;
        return *this;
    }
    Mat2& operator*=(Cplx c) {
        a11 *= c; a12 *= c; a21 *= c; a22 *= c;
        return *this;
    }
};

inline Mat2 operator+(Mat2 a, const Mat2& b) { return a += b; }
inline Mat2 operator-(Mat2 a, const Mat2& b) { return a -= b; }
inline Mat2 operator*(Cplx c, Mat2 a) { return a *= c; }
inline Mat2 operator*(Mat2 a, Cplx c) { return a *= c; }

inline Mat2 mat_mul(const Mat2& a, const Mat2& b) {
    return {a.a11 * b.a11 + a.a12 * b.a21, a.a11 * b.a12 + a.a12 * b.a22,
            a.a21 * b.a11 + a.a22 * b.a21, a.a21 * b.a12 + a.a22 * b.a22};
}

inline Mat2 operator*(const Mat2& a, const Mat2& b) { return mat_mul(a, b); }

inline Mat2 commutator(const Mat2& a, const Mat2& b) { return a * b - b * a; }

inline Cplx det(const Mat2& a) { return a.a11 * a.a22 - a.a12 * a.a21; }

inline Cplx trace(const Mat2& a) { return a.a11 + a.a22; }

/// Conjugate transpose.
inline Mat2 adjoint(const Mat2& a) {
    using std::conj;
    return {conj(a.a11), conj(a.a21), conj(a.a12), conj(a.a22)};
}

/// Largest singular value, from the closed-form eigenvalues of A^H A.
inline double spectral_norm(const Mat2& a) {
    const Mat2 h = adjoint(a) * a; // Hermitian PSD
    const double tr = h.a11.real() + h.a22.real();
    const double dt = std::real(det(h));
    const double disc = std::max(tr * tr - 4.0 * dt, 0.0);
    return std::sqrt(std::max(0.5 * (tr + std::sqrt(disc)), 0.0));
}

inline double max_abs_entry(const Mat2& a) {
    return std::max(std::max(std::abs(a.a11), std::abs(a.a12)),
                    std::max(std::abs(a.a21), std::abs(a.a22)));
}

namespace detail {

/// sinh(p)/p, switching to the even series below |p| = 1e-4 to avoid
/// cancellation near p = 0.
inline Cplx sinhc(Cplx p) {
    if (std::abs(p) < 1e-4) {
        const Cplx p2 = p * p;
        return 1.0 + p2 / 6.0 * (1.0 + p2 / 20.0 * (1.0 + p2 / 42.0));
    }
    return std::sinh(p) / p;
}

} // namespace detail

/// Exponential of a traceless 2x2 matrix via the closed form
///   exp(W) = cosh(p) I + sinh(p)/p * W,   p = sqrt(-det W),
/// valid because W^2 = -det(W) I for traceless W (Cayley-Hamilton). The
/// principal branch of the square root is taken; both cosh(p) and sinh(p)/p
/// are even in p, so the branch choice cannot affect the result.
///
/// Throws std::invalid_argument when |tr W| > 1e-10 * max(1, ||W||_2).
inline Mat2 exp_traceless(const Mat2& w) {
    const double scale = std::max(1.0, spectral_norm(w));
    if (std::abs(trace(w)) > 1e-10 * scale)
        throw std::invalid_argument("exp_traceless: matrix is not traceless");
    const Cplx p = std::sqrt(-det(w));
    const Cplx ch = std::cosh(p);
    const Cplx sc = detail::sinhc(p);
    return {ch + sc * w.a11, sc * w.a12, sc * w.a21, ch + sc * w.a22};
}

} // namespace mtcorr
