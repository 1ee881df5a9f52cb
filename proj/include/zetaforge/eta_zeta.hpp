#pragma once

/// @file eta_zeta.hpp
/// @brief The base-m eta family, eta-based zeta, Euler products, classical
/// zeros and the functional-equation cross-check.

#include "zetaforge/numerics.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace zetaforge {

enum class Acceleration { none, alternating };

/// Which eta_m series to evaluate, and how.
struct EtaSpec {
    unsigned base = 2;
    std::uint64_t terms = 0;
    Acceleration acceleration = Acceleration::none;

    /// Throws DomainError on base < 2, terms < base (unaccelerated), or
    /// acceleration requested for base != 2.
    void validate() const;
};

struct EvalResult {
    Complex value;
    /// |value - limit| <= err_estimate within the evaluator's domain.
    double err_estimate = 0.0;
    std::uint64_t terms_used = 0;
};

/// Zero of the factor 1 - m^{1-t}: t = 1 +/- 2j pi i / ln m.
struct ClassicalZero {
    unsigned base = 2;
    int j = 0; ///< signed: the sign selects the conjugate
    Complex t;
    double residual = 0.0;
};

inline constexpr double kDenominatorGuard = 1e-9;
inline constexpr double kMaxAcceleratedHeight = 150.0;
inline constexpr double kMinAcceleratedTol = 1e-12;

/// Coefficient of n^{-s} in eta_m: -(m-1) on multiples of m, +1 otherwise.
inline int eta_coefficient(unsigned m, std::uint64_t n) noexcept {
    return n % m == 0 ? -static_cast<int>(m - 1) : 1;
}

/// Raw block-partial sum of eta_m, through the block of m terms containing
/// `terms`. The error estimate bounds the remaining blocks via the mean-zero
/// block structure: 2(m-1)|s| (m K^{-sigma-1} + K^{-sigma}/sigma), K = last
/// term index. Requires m >= 2, Re s > 0, terms >= m.
EvalResult eta_m_partial(unsigned m, Complex s, std::uint64_t terms, std::size_t jobs = 1);

/// eta_2(s) by Chebyshev-weighted alternating-series acceleration
/// (Borwein's algorithm 2). The term count is the smallest n whose bound
///   Gamma(sigma) eta(sigma) / (|Gamma(s)| d_n)
/// plus a rounding allowance meets tol. Requires Re s > 0,
/// |Im s| <= 150, tol >= 1e-12.
EvalResult eta2_accelerated(Complex s, double tol = 1e-12);

/// Dispatch on an EtaSpec: accelerated eta_2 or raw block sums.
EvalResult evaluate_eta(const EtaSpec& spec, Complex s, double tol = 1e-12, std::size_t jobs = 1);

/// zeta(s) = eta_2(s) / (1 - 2^{1-s}). PoleError within 1e-9 of s = 1,
/// SingularityError when |1 - 2^{1-s}| <= 1e-9 elsewhere.
EvalResult zeta_from_eta(Complex s, double tol = 1e-12);

/// [(-1)^N N^{-s} / 2 + sum_{n<=N} (-1)^{n+1} n^{-s}] / (1 - 2^{1-s}).
/// Exactly -1/2 at s = 0 for every N >= 2.
Complex zeta_partial_corrected(Complex s, std::uint64_t terms, std::size_t jobs = 1);

/// prod over the first n_primes primes of 1 / (1 - p^{-s}); Re s > 1.
Complex euler_product_partial(Complex s, std::size_t n_primes);

/// sum_{n=k}^{2k} n^{-s}.
Complex tail_vanishing_probe(Complex s, std::uint64_t k, std::size_t jobs = 1);

/// |1 - m^{1-t}|.
double classical_zero_residual(unsigned m, Complex t);

/// t_j for j = 1..j_max, both signs, ordered +1, -1, +2, -2, ...
std::vector<ClassicalZero> classical_zeros(unsigned m, unsigned j_max);

/// |sum_{odd n<=N} n^{-s} - sum_{even n<=N} n^{-s}|; N even, Re s > 0.
double odd_even_split_residual(Complex s, std::uint64_t terms, std::size_t jobs = 1);

/// |zeta(t) - 2^t pi^{t-1} sin(pi t / 2) Gamma(1-t) zeta(1-t)| with both
/// zeta values from eta at tolerance `tol`. Requires 0 < Re t < 1.
double functional_equation_residual(Complex t, double tol = 1e-9);

} // namespace zetaforge
