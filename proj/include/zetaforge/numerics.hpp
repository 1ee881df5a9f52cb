#pragma once

/// @file numerics.hpp
/// @brief Complex arithmetic primitives shared by every evaluator.
///
/// All functions here are pure. The value type is std::complex<double>;
/// NaN or infinite components are treated as errors, never as values.

#include <complex>
#include <cstdint>

namespace zetaforge {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr double kLn2 = 0.693147180559945309417232121458176568;

inline bool is_finite(Complex z) noexcept {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

/// n^{-s} = exp(-s ln n) with the real logarithm of n. Exactly 1 for n = 1.
/// The modulus is n^{-Re s} and depends on Re s alone.
Complex cpow_neg(std::uint64_t n, Complex s) noexcept;

/// Gamma function. Lanczos (g = 7, nine coefficients) for Re s >= 1/2 and
/// the reflection formula below that. Relative error below 1e-12 for
/// |Im s| <= 50, 0 < Re s <= 10. Throws PoleError at s = 0, -1, -2, ...
Complex complex_gamma(Complex s);

/// Analytic branch of ln Gamma(s) for Re s > 0 (continuous in Im s, not
/// the principal log of Gamma). Throws DomainError for Re s <= 0.
Complex log_gamma(Complex s);

/// Riemann-Siegel theta by its asymptotic series through the y^{-3} term:
///   (y/2) ln(y/2pi) - y/2 - pi/8 + 1/(48y) + 7/(5760y^3).
/// Accurate to 1e-7 for y >= 10. Throws DomainError for y < 2.
double rs_theta(double y);

/// Riemann-Siegel theta from Im ln Gamma(1/4 + iy/2) - (y/2) ln pi.
/// Used where the asymptotic series is too coarse (small y).
double rs_theta_exact(double y);

} // namespace zetaforge
