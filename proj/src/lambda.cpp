#include "zetaforge/lambda.hpp"

#include "zetaforge/errors.hpp"
#include "zetaforge/parallel.hpp"

#include <algorithm>
#include <cmath>

namespace zetaforge {

namespace {

constexpr const char* kModule = "lambda_asym";

void require_below_one(Complex s, const char* op) {
    if (!is_finite(s) || !(s.real() < 1.0)) {
        throw DomainError(kModule, op, "requires Re s < 1");
    }
}

} // namespace

Complex LambdaAsymptote::value() const {
    return a * static_cast<double>(n) * cpow_neg(n, s);
}

LambdaAsymptote make_lambda_asymptote(Complex s, std::uint64_t n) {
    require_below_one(s, "lambda_asymptote");
    if (n < 1) {
        throw DomainError(kModule, "lambda_asymptote", "requires N >= 1");
    }
    return LambdaAsymptote{s, 1.0 / (1.0 - s), n};
}

Complex lambda_partial(Complex s, std::uint64_t n, std::size_t jobs) {
    if (n < 1) {
        throw DomainError(kModule, "lambda_partial", "requires N >= 1");
    }
    return chunked_sum(1, n, [s](std::uint64_t m) { return cpow_neg(m, s); }, jobs);
}

Complex lambda_asymptote(Complex s, std::uint64_t n) {
    return make_lambda_asymptote(s, n).value();
}

double lambda_relative_error(Complex s, std::uint64_t n, std::size_t jobs) {
    const Complex asymptote = lambda_asymptote(s, n);
    return std::abs(lambda_partial(s, n, jobs) - asymptote) / std::abs(asymptote);
}

double scaling_residual(Complex s, std::uint64_t n, std::uint64_t k, std::size_t jobs) {
    require_below_one(s, "scaling_residual");
    if (k < 2 || n < 1) {
        throw DomainError(kModule, "scaling_residual", "requires k >= 2 and N >= 1");
    }
    const Complex scaled = lambda_partial(s, k * n, jobs);
    const Complex factor = static_cast<double>(k) * cpow_neg(k, s);
    return std::abs(scaled - factor * lambda_partial(s, n, jobs)) / std::abs(scaled);
}

double SiftedSumRatio::relative_deviation() const {
    const double expected = predicted.convert_to<double>();
    return std::abs(ratio() - expected) / expected;
}

SiftedSumRatio sifted_sum_ratio(std::uint32_t p, Complex s, const SmallestFactorTable& table,
                                std::size_t jobs) {
    require_below_one(s, "sifted_sum_ratio");
    const std::uint32_t n = table.limit();
    if (p < 2 || p > n || table[p] != p) {
        throw DomainError(kModule, "sifted_sum_ratio", "p must be a prime <= N");
    }
    const auto& primes = table.primes();
    const auto order = static_cast<std::size_t>(std::upper_bound(primes.begin(), primes.end(), p) - primes.begin());
    if (order > kMaxRatioIndex) {
        throw DomainError(kModule, "sifted_sum_ratio", "prime index beyond the exact-ratio range");
    }
    SiftedSumRatio out;
    out.p = p;
    out.n = n;
    out.lambda_full = lambda_partial(s, n, jobs);
    out.lambda_p = chunked_sum(
        p, n,
        [&table, p, s](std::uint64_t m) {
            return table[static_cast<std::uint32_t>(m)] == p ? cpow_neg(m, s) : Complex{0.0, 0.0};
        },
        jobs);
    out.predicted = removal_ratio(order).value;
    return out;
}

SiftedSumRatio sifted_sum_ratio(std::uint32_t p, Complex s, std::uint32_t n, std::size_t jobs) {
    require_below_one(s, "sifted_sum_ratio");
    if (n < 2 || n > kMaxSiftLimit) {
        throw DomainError(kModule, "sifted_sum_ratio", "N must lie in [2, 10^7]");
    }
    return sifted_sum_ratio(p, s, SmallestFactorTable(n), jobs);
}

Complex sigma_limit_probe(Complex s, double x) {
    if (!(x > 0.0 && x < 1.0)) {
        throw DomainError(kModule, "sigma_limit_probe", "requires 0 < x < 1");
    }
    return std::exp((1.0 - s) * std::log1p(-x));
}

} // namespace zetaforge
