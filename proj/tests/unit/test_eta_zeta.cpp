#include "zetaforge/errors.hpp"
#include "zetaforge/eta_zeta.hpp"
#include "zetaforge/parallel.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace zetaforge;

namespace {

// eta_2 reference values, mpmath at 40 digits.
struct EtaOracle {
    Complex s;
    Complex value;
};
const EtaOracle kEta[] = {
    {{0.5, 100.0}, {-1.0339379224100384662, 0.7631966277426426554}},
    {{0.5, 150.0}, {-0.17651989497479292319, -0.12678515071779462164}},
    {{0.2, 30.0}, {-0.15600576847840052412, -2.1414417786524792861}},
    {{0.8, 2.0}, {0.80746668553681368257, 0.33168735961436877926}},
    {{0.05, 25.0}, {-1.3864817933213341624, 1.1820657783462641681}},
    {{0.5, 10.0}, {-0.098171553348559767916, 1.3339181918462503031}},
};

const double kGamma1 = 14.134725141734693790;

} // namespace

TEST_CASE("accelerated eta against oracle values") {
    for (const auto& e : kEta) {
        CAPTURE(e.s);
        const EvalResult r = eta2_accelerated(e.s, 1e-12);
        CHECK(std::abs(r.value - e.value) <= r.err_estimate);
        CHECK(r.err_estimate <= 1e-12);
        CHECK(r.terms_used > 0);
    }
    const EvalResult loose = eta2_accelerated({0.5, 100.0}, 1e-6);
    CHECK(std::abs(loose.value - kEta[0].value) <= 1e-6);
    CHECK(loose.terms_used < eta2_accelerated({0.5, 100.0}, 1e-12).terms_used);
}

TEST_CASE("accelerated eta domain") {
    CHECK_THROWS_AS(eta2_accelerated({0.0, 10.0}), DomainError);
    CHECK_THROWS_AS(eta2_accelerated({0.5, 150.5}), DomainError);
    CHECK_THROWS_AS(eta2_accelerated({0.5, 10.0}, 1e-13), DomainError);
    CHECK_THROWS_AS(eta2_accelerated({std::nan(""), 10.0}), DomainError);
}

TEST_CASE("zeta from eta") {
    CHECK(std::abs(zeta_from_eta({2.0, 0.0}).value - kPi * kPi / 6.0) <= 1e-10);
    CHECK(std::abs(zeta_from_eta({3.0, 0.0}).value - 1.2020569031595942854) <= 1e-12);
    CHECK(std::abs(zeta_from_eta({0.5, 0.0}).value - -1.4603545088095868129) <= 1e-11);
    CHECK(std::abs(zeta_from_eta({0.5, kGamma1}).value) <= 1e-11);
    CHECK_THROWS_AS(zeta_from_eta({1.0, 0.0}), PoleError);
    CHECK_THROWS_AS(zeta_from_eta({1.0 + 1e-10, 0.0}), PoleError);
    CHECK_THROWS_AS(zeta_from_eta({1.0, 2.0 * kPi / kLn2}), SingularityError);
}

TEST_CASE("raw eta partial sums decompose into cosine and sine parts") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> x(0.01, 0.99);
    std::uniform_real_distribution<double> y(-40.0, 40.0);
    for (int i = 0; i < 20; ++i) {
        const double sx = x(rng);
        const double sy = y(rng);
        const std::uint64_t n = 2 * (1 + rng() % 5000);
        CompensatedSum re;
        CompensatedSum im;
        for (std::uint64_t k = 1; k <= n; ++k) {
            const double sign = k % 2 == 1 ? 1.0 : -1.0;
            const double mod = std::pow(static_cast<double>(k), -sx);
            const double arg = sy * std::log(static_cast<double>(k));
            re.add(sign * mod * std::cos(arg));
            im.add(-sign * mod * std::sin(arg));
        }
        const EvalResult r = eta_m_partial(2, {sx, sy}, n);
        CHECK(r.terms_used == n);
        CHECK(std::fabs(r.value.real() - re.value()) <= 1e-12);
        CHECK(std::fabs(r.value.imag() - im.value()) <= 1e-12);
    }
}

TEST_CASE("raw partial sums round up to whole blocks") {
    CHECK(eta_m_partial(3, {0.5, 1.0}, 10).terms_used == 12);
    CHECK(eta_m_partial(2, {0.5, 1.0}, 7).terms_used == 8);
    CHECK_THROWS_AS(eta_m_partial(1, {0.5, 1.0}, 10), DomainError);
    CHECK_THROWS_AS(eta_m_partial(3, {0.5, 1.0}, 2), DomainError);
    CHECK_THROWS_AS(eta_m_partial(3, {-0.5, 1.0}, 100), DomainError);
}

TEST_CASE("base-3 eta against the zeta factorisation") {
    const Complex s{0.5, 10.0};
    const Complex zeta = kEta[5].value / (1.0 - 2.0 * cpow_neg(2, s));
    const Complex want = (1.0 - 3.0 * cpow_neg(3, s)) * zeta;
    const EvalResult r = eta_m_partial(3, s, 1'000'000);
    CHECK(std::abs(r.value - want) <= r.err_estimate);
    CHECK(std::abs(r.value - want) <= 5e-3);
}

TEST_CASE("acceleration is consistent with raw sums of 1e7 terms") {
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> x(0.05, 0.95);
    std::uniform_real_distribution<double> y(-30.0, 30.0);
    for (int i = 0; i < 50; ++i) {
        const Complex s{x(rng), y(rng)};
        CAPTURE(s);
        const EvalResult fast = eta2_accelerated(s);
        const EvalResult raw = eta_m_partial(2, s, 10'000'000);
        CHECK(std::abs(fast.value - raw.value) <= fast.err_estimate + raw.err_estimate);
    }
}

TEST_CASE("evaluate_eta dispatch") {
    const Complex s{0.5, 10.0};
    EtaSpec accel{2, 0, Acceleration::alternating};
    CHECK(evaluate_eta(accel, s).value == eta2_accelerated(s).value);
    EtaSpec raw{2, 1000, Acceleration::none};
    CHECK(evaluate_eta(raw, s).value == eta_m_partial(2, s, 1000).value);
    CHECK_THROWS_AS(evaluate_eta(EtaSpec{3, 0, Acceleration::alternating}, s), DomainError);
    CHECK_THROWS_AS(evaluate_eta(EtaSpec{1, 100, Acceleration::none}, s), DomainError);
    CHECK_THROWS_AS(evaluate_eta(EtaSpec{5, 3, Acceleration::none}, s), DomainError);
}

TEST_CASE("corrected partial sums: parity at s = 0") {
    for (std::uint64_t n = 2; n <= 60; ++n) {
        CHECK(zeta_partial_corrected({0.0, 0.0}, n) == Complex(-0.5, 0.0));
    }
    CHECK(zeta_partial_corrected({0.0, 0.0}, 1'000'001) == Complex(-0.5, 0.0));
    CHECK(zeta_partial_corrected({0.0, 0.0}, 1'000'000) == Complex(-0.5, 0.0));
}

TEST_CASE("corrected partial sums: parity gap shrinks for Re s > 0") {
    const Complex s{0.5, 10.0};
    double previous = INFINITY;
    for (std::uint64_t n : {100u, 10'000u, 1'000'000u}) {
        const double gap = std::abs(zeta_partial_corrected(s, n) - zeta_partial_corrected(s, n + 1));
        CHECK(gap < previous);
        previous = gap;
    }
    const Complex zeta = kEta[5].value / (1.0 - 2.0 * cpow_neg(2, s));
    CHECK(std::abs(zeta_partial_corrected(s, 1'000'000) - zeta) <= 1e-6);
    CHECK_THROWS_AS(zeta_partial_corrected({1.0, 0.0}, 10), PoleError);
    CHECK_THROWS_AS(zeta_partial_corrected({0.5, 0.0}, 1), DomainError);
}

TEST_CASE("Euler product against the eta-based zeta") {
    CHECK(std::abs(euler_product_partial({3.0, 0.0}, 10'000) - zeta_from_eta({3.0, 0.0}).value -
                   -4.540824976e-12) <= 1e-12);
    CHECK(euler_product_partial({2.0, 0.0}, 10'000).real() - kPi * kPi / 6.0 ==
          doctest::Approx(-1.25557615e-6).epsilon(1e-6));
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> x(2.5, 6.0);
    std::uniform_real_distribution<double> y(-20.0, 20.0);
    for (int i = 0; i < 20; ++i) {
        const Complex s{x(rng), y(rng)};
        CAPTURE(s);
        CHECK(std::abs(euler_product_partial(s, 10'000) - zeta_from_eta(s).value) <= 1e-8);
    }
    CHECK_THROWS_AS(euler_product_partial({1.0, 3.0}, 10), DomainError);
}

TEST_CASE("tail probe") {
    CHECK(tail_vanishing_probe({0.0, 0.0}, 100) == Complex(101.0, 0.0));
    CHECK(std::abs(tail_vanishing_probe({2.0, 5.0}, 10'000)) < std::abs(tail_vanishing_probe({2.0, 5.0}, 100)));
    CHECK_THROWS_AS(tail_vanishing_probe({2.0, 0.0}, 1), DomainError);
}

TEST_CASE("classical zeros") {
    for (unsigned m : {2u, 3u, 4u, 10u}) {
        const auto zeros = classical_zeros(m, 10);
        REQUIRE(zeros.size() == 20);
        CHECK(zeros[0].j == 1);
        CHECK(zeros[1].j == -1);
        CHECK(zeros[19].j == -10);
        for (const auto& z : zeros) {
            CHECK(z.t.real() == 1.0);
            CHECK(z.t.imag() == doctest::Approx(2.0 * kPi * z.j / std::log(double(m))));
            CHECK(z.residual <= 1e-12);
            CHECK(classical_zero_residual(m, z.t) == z.residual);
        }
    }
    CHECK(classical_zero_residual(2, {0.5, 3.0}) > 0.1);
    CHECK_THROWS_AS(classical_zeros(1, 3), DomainError);
}

TEST_CASE("odd/even split residual") {
    const Complex rho{0.5, kGamma1};
    const double r4 = odd_even_split_residual(rho, 10'000);
    const double r6 = odd_even_split_residual(rho, 1'000'000);
    CHECK(r6 < r4);
    CHECK(odd_even_split_residual(rho, 1'000'000, 4) == r6);
    CHECK_THROWS_AS(odd_even_split_residual(rho, 1001), DomainError);
}

TEST_CASE("functional equation") {
    for (const Complex t : {Complex{0.5, 14.0}, Complex{0.2, 2.0}, Complex{0.8, 30.0}, Complex{0.3, -7.0}}) {
        CAPTURE(t);
        CHECK(functional_equation_residual(t) <= 1e-6);
    }
    CHECK_THROWS_AS(functional_equation_residual({1.2, 3.0}), DomainError);
}
