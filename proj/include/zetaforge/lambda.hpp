#pragma once

/// @file lambda.hpp
/// @brief Partial power sums lambda(N) = sum_{n<=N} n^{-s}, their
/// N^{1-s}/(1-s) asymptote, scaling law and sifted-class sums.

#include "zetaforge/numerics.hpp"
#include "zetaforge/sieve.hpp"

#include <cstddef>
#include <cstdint>

namespace zetaforge {

/// lambda(N) ~ a N^{1-s} with a = 1/(1-s), for Re s < 1.
struct LambdaAsymptote {
    Complex s;
    Complex a;
    std::uint64_t n = 0;

    Complex value() const;
};

/// Throws DomainError for Re s >= 1.
LambdaAsymptote make_lambda_asymptote(Complex s, std::uint64_t n);

/// Deterministic compensated sum of n^{-s}, n = 1..N.
Complex lambda_partial(Complex s, std::uint64_t n, std::size_t jobs = 1);

/// N^{1-s} / (1-s). Throws DomainError for Re s >= 1.
Complex lambda_asymptote(Complex s, std::uint64_t n);

/// |lambda_partial - lambda_asymptote| / |lambda_asymptote|.
double lambda_relative_error(Complex s, std::uint64_t n, std::size_t jobs = 1);

/// |lambda(kN) - k^{1-s} lambda(N)| / |lambda(kN)|, Re s < 1, k >= 2.
double scaling_residual(Complex s, std::uint64_t n, std::uint64_t k, std::size_t jobs = 1);

struct SiftedSumRatio {
    std::uint32_t p = 0;
    std::uint64_t n = 0;
    Complex lambda_p;
    Complex lambda_full;
    Rational predicted;

    Complex ratio() const { return lambda_p / lambda_full; }
    /// |ratio - predicted| / predicted.
    double relative_deviation() const;
};

/// lambda_p sums n^{-s} over n <= N with smallest prime factor p and is
/// compared with removal_ratio(pi(p)). Re s < 1; p prime, p <= N.
SiftedSumRatio sifted_sum_ratio(std::uint32_t p, Complex s, const SmallestFactorTable& table,
                                std::size_t jobs = 1);
SiftedSumRatio sifted_sum_ratio(std::uint32_t p, Complex s, std::uint32_t n, std::size_t jobs = 1);

/// (1-x)^{1-s} for 0 < x < 1.
Complex sigma_limit_probe(Complex s, double x);

} // namespace zetaforge
