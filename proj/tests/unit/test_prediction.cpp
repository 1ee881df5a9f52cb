#include "zetaforge/errors.hpp"
#include "zetaforge/prediction.hpp"

#include <doctest.h>

#include <cmath>
#include <vector>

using namespace zetaforge;

TEST_CASE("predicted ordinates") {
    CHECK(predicted_y_asymptotic(2, 2) == doctest::Approx(18.129440567308777).epsilon(1e-15));
    CHECK(predicted_y_prime_order(3, 2) == doctest::Approx(6.0 * 3.141592653589793));
    CHECK(predicted_y_prime_pair(2, 3, 1) == doctest::Approx(3.141592653589793 / std::log(1.5)));
    CHECK(predicted_y_gap_form(101, 2.0, 2) == doctest::Approx(101.0 * 3.141592653589793));
    CHECK_THROWS_AS(predicted_y_asymptotic(1, 2), DomainError);
    CHECK_THROWS_AS(predicted_y_prime_pair(4, 5, 2), DomainError);
    CHECK_THROWS_AS(predicted_y_prime_pair(7, 5, 2), DomainError);
    CHECK_THROWS_AS(predicted_y_gap_form(7, 0.0, 2), DomainError);
}

TEST_CASE("linearity in k is exact") {
    for (std::uint64_t n : {2u, 3u, 17u, 1000u, 99991u}) {
        for (int k : {2, 3, 7, 10}) {
            CHECK(predicted_y_asymptotic(n, k) == k * predicted_y_asymptotic(n, 1));
            CHECK(predicted_y_prime_order(n, k) == k * predicted_y_prime_order(n, 1));
            CHECK(predicted_y_gap_form(n, 6.0, k) == k * predicted_y_gap_form(n, 6.0, 1));
        }
    }
    CHECK(predicted_y_prime_pair(99991, 100003, 5) == 5 * predicted_y_prime_pair(99991, 100003, 1));
}

TEST_CASE("pair form matches gap form for large primes") {
    const PrimeTable t = sieve_primes(200'000);
    for (std::size_t i = t.count_up_to(100'000); i + 1 < t.count(); ++i) {
        const std::uint64_t p = t.primes[i];
        const std::uint64_t q = t.primes[i + 1];
        const double pair = predicted_y_prime_pair(p, q, 2);
        const double gap = predicted_y_gap_form(p, static_cast<double>(q - p), 2);
        REQUIRE(std::fabs(pair - gap) / gap <= 0.005);
    }
}

TEST_CASE("gap law chain reproduces the asymptotic form") {
    const GapLawReport g = gap_law_report(1'000'000, 100'000);
    CHECK(g.predicted_gap == doctest::Approx(std::log(1e6)));
    CHECK(g.gap_relative_error() <= 0.05);
    const double e = g.gap_relative_error();
    const double via_gaps = predicted_y_gap_form(1'000'000, g.mean_gap, 2);
    const double direct = predicted_y_asymptotic(1'000'000, 2);
    CHECK(std::fabs(via_gaps / direct - 1.0) <= e / (1.0 - e) + 1e-12);
    CHECK_THROWS_AS(gap_law_report(100, 20), DomainError);
}

TEST_CASE("comparison rows") {
    const std::vector<ZeroRecord> zeros{
        {1, 14.134725141734695, 0.0, ZeroMethod::sign_change_bisection},
        {2, 21.022039638771556, 0.0, ZeroMethod::sign_change_bisection},
        {3, 25.01085758014569, 0.0, ZeroMethod::sign_change_bisection},
    };
    const auto rows = compare_to_actual(2, 5, 2, zeros);
    REQUIRE(rows.size() == 4);
    CHECK(rows[0].n == 2);
    CHECK(rows[0].predicted_y == predicted_y_asymptotic(2, 2));
    REQUIRE(rows[0].gamma_by_index);
    CHECK(*rows[0].gamma_by_index == zeros[1].gamma);
    CHECK(*rows[0].rel_dev_index == doctest::Approx(std::fabs(rows[0].predicted_y - zeros[1].gamma) / zeros[1].gamma));
    CHECK(*rows[0].gamma_nearest == zeros[1].gamma);
    CHECK(rows[1].gamma_by_index == zeros[2].gamma);
    CHECK_FALSE(rows[2].gamma_by_index);
    CHECK_FALSE(rows[2].rel_dev_index);
    CHECK(rows[3].gamma_nearest == zeros[1].gamma);

    const auto none = compare_to_actual(2, 3, 2, {});
    CHECK_FALSE(none[0].gamma_nearest);
    CHECK_THROWS_AS(compare_to_actual(5, 2, 2, zeros), DomainError);
}

TEST_CASE("k sweep") {
    const std::vector<ZeroRecord> zeros{
        {1, 14.134725141734695, 0.0, ZeroMethod::sign_change_bisection},
        {2, 21.022039638771556, 0.0, ZeroMethod::sign_change_bisection},
        {3, 25.01085758014569, 0.0, ZeroMethod::sign_change_bisection},
    };
    const auto sweep = sweep_k(2, 4, 3, zeros);
    REQUIRE(sweep.size() == 3);
    CHECK(sweep[0].k == 1);
    CHECK(sweep[1].matched == 2);
    CHECK(sweep[1].mean_rel_dev_index > 0.0);
}

TEST_CASE("location diagnostic") {
    const PrimeLocation exact = prime_location_condition(2.0 * 3.141592653589793);
    CHECK(exact.ratio == doctest::Approx(1.0));
    CHECK(exact.nearest_int == 1);
    CHECK(exact.distance <= 1e-15);
    const PrimeLocation first = prime_location_condition(14.134725);
    CHECK(first.ratio == doctest::Approx(2.2496).epsilon(1e-4));
    CHECK(first.nearest_int == 2);
    CHECK(first.distance == doctest::Approx(0.2496).epsilon(1e-3));
}
