#include "zetaforge/errors.hpp"
#include "zetaforge/lambda.hpp"

#include <doctest.h>

#include <cmath>

using namespace zetaforge;

namespace {
const double kGamma1 = 14.134725141734693790;
}

TEST_CASE("partial sums against oracle values") {
    const Complex a = lambda_partial({0.5, 0.0}, 1'000'000);
    CHECK(a.real() == doctest::Approx(1998.5401454911487465).epsilon(1e-14));
    CHECK(a.imag() == 0.0);
    CHECK(lambda_partial({0.9, 0.0}, 1000).real() == doctest::Approx(10.523506611799367352).epsilon(1e-14));
    CHECK(lambda_partial({0.0, 0.0}, 12345) == Complex(12345.0, 0.0));
    CHECK(lambda_partial({0.5, 3.0}, 500'000, 1) == lambda_partial({0.5, 3.0}, 500'000, 4));
}

TEST_CASE("asymptote") {
    const LambdaAsymptote la = make_lambda_asymptote({0.5, 0.0}, 1'000'000);
    CHECK(la.a == Complex(2.0, 0.0));
    CHECK(la.value().real() == doctest::Approx(2000.0));
    CHECK(lambda_asymptote({0.5, 0.0}, 1'000'000) == la.value());
    CHECK_THROWS_AS(make_lambda_asymptote({1.0, 0.0}, 10), DomainError);
    CHECK_THROWS_AS(lambda_asymptote({1.5, 2.0}, 10), DomainError);
}

TEST_CASE("relative error on the half line") {
    for (double y : {0.0, 5.0, 12.0, 20.0, 30.0, -17.0}) {
        CAPTURE(y);
        double previous = INFINITY;
        for (std::uint64_t n : {1'000u, 10'000u, 100'000u, 1'000'000u}) {
            const double e = lambda_relative_error({0.5, y}, n);
            CHECK(e < previous);
            previous = e;
        }
        CHECK(previous <= 0.05);
    }
}

TEST_CASE("relative error at the first zero") {
    const Complex rho{0.5, kGamma1};
    double previous = INFINITY;
    for (std::uint64_t n : {1'000u, 10'000u, 100'000u, 1'000'000u}) {
        const double e = lambda_relative_error(rho, n);
        CHECK(e < previous);
        previous = e;
    }
    CHECK(previous <= 0.01);
    CHECK(previous < lambda_relative_error({0.5, 10.0}, 1'000'000));
}

TEST_CASE("scaling law") {
    CHECK(scaling_residual({0.0, 0.0}, 1000, 3) == 0.0);
    CHECK(scaling_residual({0.0, 0.0}, 54321, 7) == 0.0);
    const Complex s{0.3, 8.0};
    CHECK(scaling_residual(s, 100'000, 2) < scaling_residual(s, 1000, 2));
    CHECK_THROWS_AS(scaling_residual(s, 1000, 1), DomainError);
    CHECK_THROWS_AS(scaling_residual({1.2, 0.0}, 1000, 2), DomainError);
}

TEST_CASE("sifted sums at s = 0 are the sieve densities") {
    const std::uint32_t n = 100'000;
    const SmallestFactorTable table(n);
    const auto classes = empirical_sift(table);
    for (std::size_t i = 0; i < 10; ++i) {
        const SiftedSumRatio r = sifted_sum_ratio(classes[i].p, {0.0, 0.0}, table);
        CHECK(r.lambda_p == Complex(static_cast<double>(classes[i].members_count), 0.0));
        CHECK(r.lambda_full == Complex(static_cast<double>(n), 0.0));
        CHECK(r.predicted == removal_ratio(i + 1).value);
    }
}

TEST_CASE("sifted sums follow the removal ratio") {
    const SmallestFactorTable table(1'000'000);
    for (std::uint32_t p : {2u, 3u, 5u}) {
        CHECK(sifted_sum_ratio(p, {0.0, 0.0}, table).relative_deviation() <= 0.01);
        CHECK(sifted_sum_ratio(p, {0.5, kGamma1}, table).relative_deviation() <= 0.1);
    }
    const SiftedSumRatio a = sifted_sum_ratio(3, {0.5, kGamma1}, table, 1);
    const SiftedSumRatio b = sifted_sum_ratio(3, {0.5, kGamma1}, 1'000'000, 4);
    CHECK(a.lambda_p == b.lambda_p);
    CHECK_THROWS_AS(sifted_sum_ratio(4, {0.0, 0.0}, table), DomainError);
    CHECK_THROWS_AS(sifted_sum_ratio(3, {1.0, 0.0}, table), DomainError);
}

TEST_CASE("sigma limit probe") {
    const Complex s{0.5, 14.0};
    for (double x : {1e-9, 0.1, 0.5, 0.9}) {
        const Complex want = std::exp((1.0 - s) * std::log(1.0 - x));
        CHECK(std::abs(sigma_limit_probe(s, x) - want) <= 1e-14);
    }
    CHECK_THROWS_AS(sigma_limit_probe(s, 0.0), DomainError);
    CHECK_THROWS_AS(sigma_limit_probe(s, 1.0), DomainError);
}
