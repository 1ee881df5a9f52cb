#include "zetaforge/numerics.hpp"

#include "zetaforge/errors.hpp"

#include <array>
#include <cmath>

namespace zetaforge {

namespace {

constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczosCoeff = {
    0.99999999999980993,     676.5203681218851,      -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,    12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6,  1.5056327351493116e-7,
};
const double kHalfLog2Pi = 0.5 * std::log(2.0 * kPi);

// Lanczos form of ln Gamma, valid for Re s >= 1/2.
Complex lanczos_log_gamma(Complex s) {
    const Complex z = s - 1.0;
    Complex x = kLanczosCoeff[0];
    for (std::size_t i = 1; i < kLanczosCoeff.size(); ++i) {
        x += kLanczosCoeff[i] / (z + static_cast<double>(i));
    }
    const Complex t = z + kLanczosG + 0.5;
    return kHalfLog2Pi + (z + 0.5) * std::log(t) - t + std::log(x);
}

bool is_nonpositive_integer(Complex s) {
    return s.imag() == 0.0 && s.real() <= 0.0 && s.real() == std::round(s.real());
}

} // namespace

Complex cpow_neg(std::uint64_t n, Complex s) noexcept {
    if (n == 1) {
        return {1.0, 0.0};
    }
    const double ln_n = std::log(static_cast<double>(n));
    const double modulus = std::exp(-s.real() * ln_n);
    const double phase = -s.imag() * ln_n;
    return {modulus * std::cos(phase), modulus * std::sin(phase)};
}

Complex log_gamma(Complex s) {
    if (!(s.real() > 0.0) || !is_finite(s)) {
        throw DomainError("numerics_core", "log_gamma", "requires finite s with Re s > 0");
    }
    if (s.real() >= 0.5) {
        return lanczos_log_gamma(s);
    }
    // Gamma(s) = Gamma(s+1)/s keeps the branch continuous.
    return lanczos_log_gamma(s + 1.0) - std::log(s);
}

Complex complex_gamma(Complex s) {
    if (!is_finite(s)) {
        throw DomainError("numerics_core", "complex_gamma", "non-finite argument");
    }
    if (is_nonpositive_integer(s)) {
        throw PoleError("numerics_core", "complex_gamma", "pole at non-positive integer");
    }
    if (s.real() >= 0.5) {
        return std::exp(lanczos_log_gamma(s));
    }
    // Reflection: Gamma(s) Gamma(1-s) = pi / sin(pi s).
    return kPi / (std::sin(kPi * s) * std::exp(lanczos_log_gamma(1.0 - s)));
}

double rs_theta(double y) {
    if (!(y >= 2.0)) {
        throw DomainError("numerics_core", "rs_theta", "asymptotic series needs y >= 2");
    }
    const double half = 0.5 * y;
    return half * std::log(y / (2.0 * kPi)) - half - kPi / 8.0 + 1.0 / (48.0 * y) +
           7.0 / (5760.0 * y * y * y);
}

double rs_theta_exact(double y) {
    if (!(y > 0.0)) {
        throw DomainError("numerics_core", "rs_theta_exact", "requires y > 0");
    }
    return log_gamma(Complex{0.25, 0.5 * y}).imag() - 0.5 * y * std::log(kPi);
}

} // namespace zetaforge
