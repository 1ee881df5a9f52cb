#include "zetaforge/eta_zeta.hpp"

#include "zetaforge/errors.hpp"
#include "zetaforge/parallel.hpp"
#include "zetaforge/sieve.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace zetaforge {

namespace {

constexpr const char* kModule = "eta_zeta";
constexpr double kEps = std::numeric_limits<double>::epsilon();
// d_n ~ (3 + sqrt 8)^n stays finite in double up to n ~ 400.
constexpr std::uint64_t kMaxAcceleratedTerms = 350;

// 1 - m^{1-s}, exact at s = 0.
Complex one_minus_pow(unsigned m, Complex s) {
    return 1.0 - static_cast<double>(m) * cpow_neg(m, s);
}

void require_positive_real_part(Complex s, const char* op) {
    if (!is_finite(s) || !(s.real() > 0.0)) {
        throw DomainError(kModule, op, "requires finite s with Re s > 0");
    }
}

// Shifted-Chebyshev weights: d_k = sum_{i<=k} t_i with t_0 = 1 and
// t_{i+1}/t_i = 4(n+i)(n-i)/((2i+1)(2i+2)). Returns (d_n - d_k)/d_n for
// k < n and writes d_n.
std::vector<double> chebyshev_weights(std::uint64_t n, double& d_n) {
    std::vector<double> t(n + 1);
    t[0] = 1.0;
    for (std::uint64_t i = 0; i < n; ++i) {
        const auto di = static_cast<double>(i);
        const auto dn = static_cast<double>(n);
        t[i + 1] = t[i] * 4.0 * (dn + di) * (dn - di) / ((2.0 * di + 1.0) * (2.0 * di + 2.0));
    }
    std::vector<double> weights(n);
    double tail = t[n];
    for (std::uint64_t k = n; k-- > 0;) {
        weights[k] = tail;
        tail += t[k];
    }
    d_n = tail;
    for (auto& w : weights) {
        w /= d_n;
    }
    return weights;
}

double log_chebyshev_norm(std::uint64_t n) {
    double d_n = 0.0;
    chebyshev_weights(n, d_n);
    return std::log(d_n);
}

} // namespace

void EtaSpec::validate() const {
    if (base < 2) {
        throw DomainError(kModule, "EtaSpec", "base must be >= 2");
    }
    if (acceleration == Acceleration::alternating && base != 2) {
        throw DomainError(kModule, "EtaSpec", "acceleration applies only to base 2");
    }
    if (acceleration == Acceleration::none && terms < base) {
        throw DomainError(kModule, "EtaSpec", "raw partial sums need terms >= base");
    }
}

EvalResult eta_m_partial(unsigned m, Complex s, std::uint64_t terms, std::size_t jobs) {
    if (m < 2) {
        throw DomainError(kModule, "eta_m_partial", "base must be >= 2");
    }
    require_positive_real_part(s, "eta_m_partial");
    if (terms < m) {
        throw DomainError(kModule, "eta_m_partial", "terms must be >= base");
    }
    const std::uint64_t last = (terms + m - 1) / m * m;
    const Complex value = chunked_sum(
        1, last, [m, s](std::uint64_t n) { return static_cast<double>(eta_coefficient(m, n)) * cpow_neg(n, s); },
        jobs);
    const double sigma = s.real();
    const auto big = static_cast<double>(last);
    const double bound = 2.0 * (m - 1) * std::abs(s) *
                         (m * std::pow(big, -sigma - 1.0) + std::pow(big, -sigma) / sigma);
    return EvalResult{value, bound, last};
}

EvalResult eta2_accelerated(Complex s, double tol) {
    require_positive_real_part(s, "eta2_accelerated");
    if (std::abs(s.imag()) > kMaxAcceleratedHeight) {
        throw DomainError(kModule, "eta2_accelerated", "|Im s| above the 150 height ceiling");
    }
    if (!(tol >= kMinAcceleratedTol)) {
        throw DomainError(kModule, "eta2_accelerated", "tol must be >= 1e-12");
    }
    const double sigma = s.real();
    // |error| <= Gamma(sigma) eta(sigma) / (|Gamma(s)| d_n), with eta(sigma) < 1.
    const double log_prefactor = std::lgamma(sigma) - log_gamma(s).real();
    const double target = std::log(0.5 * tol);
    std::uint64_t n = 1;
    while (log_prefactor - log_chebyshev_norm(n) > target) {
        if (++n > kMaxAcceleratedTerms) {
            throw ConvergenceError(kModule, "eta2_accelerated",
                                   "term budget exhausted before reaching tol " + std::to_string(tol));
        }
    }
    double d_n = 0.0;
    const std::vector<double> weights = chebyshev_weights(n, d_n);
    CompensatedComplexSum acc;
    double rounding_sq = 0.0;
    for (std::uint64_t k = 0; k < n; ++k) {
        const Complex term = weights[k] * cpow_neg(k + 1, s);
        acc.add(k % 2 == 0 ? term : -term);
        // Phase error |Im s| ln(k+1) eps dominates at large heights.
        const double term_err =
            std::abs(term) * kEps * (4.0 + std::abs(s.imag()) * std::log(static_cast<double>(k + 1)));
        rounding_sq += term_err * term_err;
    }
    const double truncation = std::exp(log_prefactor - std::log(d_n));
    const double err = truncation + std::sqrt(rounding_sq) + kEps;
    if (err > tol) {
        throw ConvergenceError(kModule, "eta2_accelerated",
                               "rounding floor exceeds tol " + std::to_string(tol));
    }
    return EvalResult{acc.value(), err, n};
}

EvalResult evaluate_eta(const EtaSpec& spec, Complex s, double tol, std::size_t jobs) {
    spec.validate();
    if (spec.acceleration == Acceleration::alternating) {
        return eta2_accelerated(s, tol);
    }
    return eta_m_partial(spec.base, s, spec.terms, jobs);
}

EvalResult zeta_from_eta(Complex s, double tol) {
    if (std::abs(s - 1.0) <= kDenominatorGuard) {
        throw PoleError(kModule, "zeta_from_eta", "pole at s = 1");
    }
    require_positive_real_part(s, "zeta_from_eta");
    const Complex den = one_minus_pow(2, s);
    if (std::abs(den) <= kDenominatorGuard) {
        throw SingularityError(kModule, "zeta_from_eta", "1 - 2^{1-s} inside guard band");
    }
    const EvalResult eta = eta2_accelerated(s, tol);
    return EvalResult{eta.value / den, eta.err_estimate / std::abs(den), eta.terms_used};
}

Complex zeta_partial_corrected(Complex s, std::uint64_t terms, std::size_t jobs) {
    if (!is_finite(s) || s.real() < 0.0) {
        throw DomainError(kModule, "zeta_partial_corrected", "requires Re s >= 0");
    }
    if (terms < 2) {
        throw DomainError(kModule, "zeta_partial_corrected", "requires N >= 2");
    }
    if (std::abs(s - 1.0) <= kDenominatorGuard) {
        throw PoleError(kModule, "zeta_partial_corrected", "pole at s = 1");
    }
    const Complex den = one_minus_pow(2, s);
    if (std::abs(den) <= kDenominatorGuard) {
        throw SingularityError(kModule, "zeta_partial_corrected", "1 - 2^{1-s} inside guard band");
    }
    const Complex alternating = chunked_sum(
        1, terms, [s](std::uint64_t n) { return n % 2 == 1 ? cpow_neg(n, s) : -cpow_neg(n, s); }, jobs);
    const double sign = terms % 2 == 0 ? 1.0 : -1.0;
    const Complex bracket = sign * cpow_neg(terms, s) / 2.0 + alternating;
    return bracket / den;
}

Complex euler_product_partial(Complex s, std::size_t n_primes) {
    if (!is_finite(s) || !(s.real() > 1.0)) {
        throw DomainError(kModule, "euler_product_partial", "requires Re s > 1");
    }
    Complex product{1.0, 0.0};
    for (const std::uint32_t p : first_primes(n_primes)) {
        product /= 1.0 - cpow_neg(p, s);
    }
    return product;
}

Complex tail_vanishing_probe(Complex s, std::uint64_t k, std::size_t jobs) {
    if (k < 2) {
        throw DomainError(kModule, "tail_vanishing_probe", "requires k >= 2");
    }
    return chunked_sum(k, 2 * k, [s](std::uint64_t n) { return cpow_neg(n, s); }, jobs);
}

double classical_zero_residual(unsigned m, Complex t) {
    return std::abs(1.0 - std::exp((1.0 - t) * std::log(static_cast<double>(m))));
}

std::vector<ClassicalZero> classical_zeros(unsigned m, unsigned j_max) {
    if (m < 2 || j_max < 1) {
        throw DomainError(kModule, "classical_zeros", "requires m >= 2 and j_max >= 1");
    }
    const double spacing = 2.0 * kPi / std::log(static_cast<double>(m));
    std::vector<ClassicalZero> zeros;
    zeros.reserve(2 * std::size_t{j_max});
    for (unsigned j = 1; j <= j_max; ++j) {
        for (const int sign : {1, -1}) {
            const Complex t{1.0, sign * (j * spacing)};
            zeros.push_back(ClassicalZero{m, sign * static_cast<int>(j), t, classical_zero_residual(m, t)});
        }
    }
    return zeros;
}

double odd_even_split_residual(Complex s, std::uint64_t terms, std::size_t jobs) {
    require_positive_real_part(s, "odd_even_split_residual");
    if (terms < 2 || terms % 2 != 0) {
        throw DomainError(kModule, "odd_even_split_residual", "requires an even N >= 2");
    }
    const Complex diff = chunked_sum(
        1, terms, [s](std::uint64_t n) { return n % 2 == 1 ? cpow_neg(n, s) : -cpow_neg(n, s); }, jobs);
    return std::abs(diff);
}

double functional_equation_residual(Complex t, double tol) {
    if (!is_finite(t) || !(t.real() > 0.0 && t.real() < 1.0)) {
        throw DomainError(kModule, "functional_equation_residual", "requires 0 < Re t < 1");
    }
    const Complex reflected = 1.0 - t;
    if (std::abs(one_minus_pow(2, t)) <= kDenominatorGuard ||
        std::abs(one_minus_pow(2, reflected)) <= kDenominatorGuard) {
        throw SingularityError(kModule, "functional_equation_residual",
                               "an eta denominator is inside its guard band");
    }
    const Complex lhs = zeta_from_eta(t, tol).value;
    const Complex factor = std::exp(t * kLn2) * std::exp((t - 1.0) * std::log(kPi)) *
                           std::sin(kPi * t / 2.0) * complex_gamma(reflected);
    const Complex rhs = factor * zeta_from_eta(reflected, tol).value;
    return std::abs(lhs - rhs);
}

} // namespace zetaforge
