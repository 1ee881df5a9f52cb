#include "zetaforge/errors.hpp"
#include "zetaforge/sieve.hpp"

#include <doctest.h>

#include <cmath>
#include <string>
#include <vector>

using namespace zetaforge;

TEST_CASE("prime counts") {
    CHECK(sieve_primes(100).count() == 25);
    CHECK(sieve_primes(2).count() == 1);
    const PrimeTable t = sieve_primes(1'000'000);
    CHECK(t.count() == 78498);
    CHECK(t.count_up_to(100) == 25);
    CHECK(t.count_up_to(1'000'000) == 78498);
    CHECK_THROWS_AS(sieve_primes(1), DomainError);
    CHECK_THROWS_AS(sieve_primes(kMaxSieveLimit + 1), DomainError);
}

TEST_CASE("segmented sieve agrees across job counts") {
    const PrimeTable a = sieve_primes(20'000'000, 1);
    const PrimeTable b = sieve_primes(20'000'000, 4);
    CHECK(a.count() == 1'270'607);
    CHECK(a.primes == b.primes);
    CHECK(a.primes.back() == 19'999'999);
}

TEST_CASE("first primes") {
    const std::vector<std::uint32_t> want{2, 3, 5, 7, 11, 13, 17, 19, 23, 29};
    CHECK(first_primes(10) == want);
    CHECK(first_primes(10'000).back() == 104'729);
}

TEST_CASE("published removal ratios") {
    const std::vector<std::string> want{"1/2",     "1/6",        "1/15",           "4/105",
                                        "8/385",   "16/1001",    "192/17017",      "3072/323323",
                                        "55296/7436429", "110592/19605131"};
    const auto got = removal_ratios(10);
    REQUIRE(got.size() == want.size());
    for (std::size_t i = 0; i < want.size(); ++i) {
        CHECK(got[i].n == i + 1);
        CHECK(got[i].value == Rational(want[i]));
        CHECK(removal_ratio(i + 1).value == got[i].value);
    }
    CHECK_THROWS_AS(removal_ratio(0), DomainError);
    CHECK_THROWS_AS(removal_ratio(kMaxRatioIndex + 1), DomainError);
}

TEST_CASE("ratio telescoping for n <= 1000") {
    const auto ratios = removal_ratios(1000);
    const auto primes = first_primes(1000);
    Rational sum = 0;
    Rational survivors = 1;
    for (std::size_t n = 1; n <= 1000; ++n) {
        sum += ratios[n - 1].value;
        survivors *= Rational(primes[n - 1] - 1, primes[n - 1]);
        REQUIRE(sum + survivors == 1);
    }
    for (std::size_t n : {1u, 2u, 17u, 250u, 1000u}) {
        CHECK(ratio_partial_sum(n) + survivor_product(n) == 1);
    }
}

TEST_CASE("partition exactness") {
    for (std::uint32_t n : {1u, 2u, 3u, 97u, 100u, 10'000u, 100'000u, 1'000'000u}) {
        std::uint64_t total = 1;
        for (const auto& c : empirical_sift(n)) {
            total += c.members_count;
        }
        CHECK(total == n);
    }
    CHECK_THROWS_AS(empirical_sift(0), DomainError);
    CHECK_THROWS_AS(empirical_sift(static_cast<std::uint32_t>(kMaxSiftLimit + 1)), DomainError);
}

TEST_CASE("sifted classes against brute force at N = 1000") {
    const std::uint32_t n = 1000;
    const auto classes = empirical_sift(n);
    const PrimeTable t = sieve_primes(n);
    REQUIRE(classes.size() == t.count());
    for (std::size_t i = 0; i < classes.size(); ++i) {
        const std::uint32_t p = t.primes[i];
        std::uint64_t count = 0;
        std::uint32_t largest = 0;
        for (std::uint32_t m = 2; m <= n; ++m) {
            std::uint32_t q = 2;
            while (m % q != 0) {
                ++q;
            }
            if (q == p) {
                ++count;
                largest = m;
            }
        }
        CHECK(classes[i].p == p);
        CHECK(classes[i].members_count == count);
        CHECK(classes[i].largest_member == largest);
    }
}

TEST_CASE("largest member has smallest factor p") {
    const SmallestFactorTable spf(100'000);
    for (const auto& c : empirical_sift(spf)) {
        CHECK(spf[c.largest_member] == c.p);
    }
}

TEST_CASE("densities approach removal ratios") {
    // Frozen brute-force errors for p = 2..29.
    const double frozen[3][10] = {
        {0, 3.33e-5, 3.33e-5, 4.76e-6, 2.08e-5, 1.60e-5, 1.83e-4, 1.33e-6, 2.64e-4, 3.59e-4},
        {0, 3.33e-6, 3.33e-6, 5.24e-6, 7.79e-7, 4.02e-6, 2.83e-6, 1.33e-6, 1.58e-5, 8.10e-5},
        {0, 3.33e-7, 3.33e-7, 2.38e-7, 2.21e-7, 1.60e-8, 1.17e-6, 1.67e-6, 8.27e-7, 6.03e-6},
    };
    const auto ratios = removal_ratios(10);
    const std::uint32_t sizes[3] = {10'000, 100'000, 1'000'000};
    for (int row = 0; row < 3; ++row) {
        const std::uint32_t n = sizes[row];
        const auto classes = empirical_sift(n);
        for (std::size_t i = 0; i < 10; ++i) {
            const double err = std::fabs(static_cast<double>(classes[i].members_count) / n -
                                         ratios[i].value.convert_to<double>());
            CAPTURE(n);
            CAPTURE(i);
            CHECK(err <= 5.0 / std::log(static_cast<double>(n)));
            CHECK(std::fabs(err - frozen[row][i]) <= 0.01 * frozen[row][i] + 1e-12);
        }
    }
}

TEST_CASE("pi_approx") {
    CHECK(pi_approx(1'000'000) == doctest::Approx(1e6 / std::log(1e6)));
    CHECK_THROWS_AS(pi_approx(1), DomainError);
}

TEST_CASE("gap statistics") {
    const PrimeTable t = sieve_primes(150);
    const GapStats g = gap_stats(t, 100, 50);
    CHECK(g.sample_size == 19);
    CHECK(g.mean_gap == doctest::Approx(96.0 / 19.0));
    CHECK(g.max_gap == 14);

    const GapStats big = gap_stats(1'000'000, 100'000, 1);
    CHECK(std::fabs(big.mean_gap / std::log(1e6) - 1.0) <= 0.05);
    CHECK(std::fabs(big.eq55_statistic - 1.0) <= 0.1);
    CHECK_THROWS_AS(gap_stats(t, 100, 100), DomainError);
}

TEST_CASE("is_prime") {
    CHECK_FALSE(is_prime(0));
    CHECK_FALSE(is_prime(1));
    CHECK(is_prime(2));
    CHECK(is_prime(104'729));
    CHECK_FALSE(is_prime(104'729ULL * 3));
}
