#include "zetaforge/errors.hpp"
#include "zetaforge/eta_zeta.hpp"
#include "zetaforge/lambda.hpp"
#include "zetaforge/prediction.hpp"
#include "zetaforge/report.hpp"
#include "zetaforge/sieve.hpp"
#include "zetaforge/zero_finder.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

namespace zetaforge {

namespace {

class Ledger {
public:
    void add(std::string id, std::string ref, double measured, double tolerance) {
        checks_.push_back(ClaimCheck{std::move(id), std::move(ref), measured <= tolerance, measured, tolerance});
    }
    std::vector<ClaimCheck> take() { return std::move(checks_); }

private:
    std::vector<ClaimCheck> checks_;
};

double max_err_first_primes(std::uint32_t n, std::size_t how_many, std::uint32_t p_max) {
    const auto classes = empirical_sift(n);
    const auto ratios = removal_ratios(how_many);
    double worst = 0.0;
    for (std::size_t i = 0; i < how_many; ++i) {
        if (ratios[i].prime > p_max) {
            break;
        }
        const double density = static_cast<double>(classes[i].members_count) / n;
        worst = std::max(worst, std::abs(density - ratios[i].value.convert_to<double>()));
    }
    return worst;
}

double decreasing_violations(const std::vector<double>& values) {
    double violations = 0;
    for (std::size_t i = 1; i < values.size(); ++i) {
        if (!(values[i] < values[i - 1])) {
            ++violations;
        }
    }
    return violations;
}

std::string serialize(const RunConfig& config) {
    std::ostringstream out;
    write_csv(out, config, build_table(config));
    return out.str();
}

} // namespace

std::vector<ClaimCheck> run_claims_ledger(const RunConfig& config) {
    const std::size_t jobs = config.jobs;
    Ledger ledger;

    // Removal ratios against the published list.
    {
        const std::vector<std::pair<long, long>> published = {
            {1, 2},     {1, 6},       {1, 15},      {4, 105},       {8, 385},
            {16, 1001}, {192, 17017}, {3072, 323323}, {55296, 7436429}, {110592, 19605131}};
        const auto terms = removal_ratios(published.size());
        double mismatches = 0;
        for (std::size_t i = 0; i < published.size(); ++i) {
            if (terms[i].value != Rational(published[i].first, published[i].second)) {
                ++mismatches;
            }
        }
        ledger.add("ratio_list_exact", "published removal-ratio list, first ten terms", mismatches, 0);
    }

    for (const std::uint32_t n : {100'000u, 1'000'000u}) {
        std::uint64_t total = 1;
        for (const auto& cls : empirical_sift(n)) {
            total += cls.members_count;
        }
        ledger.add("partition_exact_" + std::to_string(n), "N = 1 + sum of class sizes",
                   std::abs(static_cast<double>(total) - n), 0);
    }

    ledger.add("sift_density_p_le_7", "class density tends to removal ratio (p <= 7, N = 1e6)",
               max_err_first_primes(1'000'000, 10, 7), 1e-3);
    ledger.add("sift_density_trend", "worst density error over the first ten primes decreases in N",
               decreasing_violations({max_err_first_primes(10'000, 10, 29), max_err_first_primes(100'000, 10, 29),
                                      max_err_first_primes(1'000'000, 10, 29)}),
               0);

    ledger.add("zeta_zero_parity", "corrected partial sum gives zeta(0) = -1/2 for N even and odd",
               std::max(std::abs(zeta_partial_corrected(0.0, 1000, jobs).real() + 0.5),
                        std::abs(zeta_partial_corrected(0.0, 1001, jobs).real() + 0.5)),
               1e-12);

    const double zeta2 = zeta_from_eta(2.0, 1e-12).value.real();
    ledger.add("zeta_2", "eta-based zeta(2) = pi^2/6", std::abs(zeta2 - kPi * kPi / 6.0), 1e-10);
    for (const double s : {2.0, 3.0}) {
        ledger.add("euler_vs_eta_s" + std::to_string(static_cast<int>(s)),
                   "Euler product over 1e4 primes vs eta-based zeta",
                   std::abs(euler_product_partial(s, 10'000) - zeta_from_eta(s, 1e-12).value), 1e-8);
    }

    {
        double worst = 0.0;
        for (const unsigned m : {2u, 3u, 4u, 10u}) {
            for (const auto& z : classical_zeros(m, 10)) {
                worst = std::max(worst, z.residual);
            }
        }
        ledger.add("classical_zero_residual", "classical zeros t = 1 +/- 2j pi i / ln m", worst, 1e-12);
    }

    ScanConfig scan;
    const auto zeros = scan_zeros(scan, jobs);
    {
        double worst = 0.0;
        for (const auto& z : zeros) {
            worst = std::max(worst, z.residual);
        }
        ledger.add("zero_scan_count", "29 critical-line zeros in (2, 100]",
                   std::abs(static_cast<double>(zeros.size()) - 29.0), 0);
        ledger.add("zero_scan_residual", "|zeta| at every located zero", worst, 1e-8);
        ledger.add("first_zero", "first ordinate 14.134725",
                   zeros.empty() ? INFINITY : std::abs(zeros.front().gamma - 14.134725), 1e-5);
        ledger.add("zero_count_formula", "count vs zero-counting main term",
                   std::abs(static_cast<double>(zeros.size()) - std::round(zero_count_estimate(100.0))), 1);
    }
    if (zeros.size() < 3) {
        throw ConvergenceError("cli_report", "validate", "zero scan returned fewer than three zeros");
    }
    const Complex first_zero{0.5, zeros.front().gamma};

    {
        std::mt19937_64 rng(20240611);
        const auto unit = [&rng] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
        double worst = 0.0;
        for (int i = 0; i < 20; ++i) {
            const Complex t{0.2 + 0.6 * unit(), 2.0 + 28.0 * unit()};
            worst = std::max(worst, functional_equation_residual(t));
        }
        ledger.add("functional_equation", "zeta(t) = 2^t pi^{t-1} sin(pi t/2) Gamma(1-t) zeta(1-t)", worst, 1e-6);
    }

    {
        std::vector<double> errs;
        for (const std::uint64_t n : {1'000ull, 10'000ull, 100'000ull, 1'000'000ull}) {
            errs.push_back(lambda_relative_error(first_zero, n, jobs));
        }
        ledger.add("lambda_asym_at_zero", "sum n^{-s} ~ N^{1-s}/(1-s) at the first zero, N = 1e6", errs.back(), 0.01);
        ledger.add("lambda_asym_trend", "relative error decreases over N = 1e3..1e6", decreasing_violations(errs), 0);
        ledger.add("lambda_asym_real_half", "sum n^{-1/2} ~ 2 sqrt(N), N = 1e6",
                   lambda_relative_error(0.5, 1'000'000, jobs), 0.05);
    }

    {
        const SmallestFactorTable table(1'000'000);
        double worst_real = 0.0;
        double worst_zero = 0.0;
        for (const std::uint32_t p : {2u, 3u, 5u}) {
            worst_real = std::max(worst_real, sifted_sum_ratio(p, 0.0, table, jobs).relative_deviation());
            worst_zero = std::max(worst_zero, sifted_sum_ratio(p, first_zero, table, jobs).relative_deviation());
        }
        ledger.add("sifted_ratio_s0", "lambda_p / lambda = removal ratio at s = 0 (p = 2, 3, 5)", worst_real, 0.01);
        ledger.add("sifted_ratio_at_zero", "lambda_p / lambda = removal ratio at the first zero (p = 2, 3, 5)",
                   worst_zero, 0.1);
    }

    {
        const GapLawReport report = gap_law_report(1'000'000, 100'000, jobs);
        ledger.add("gap_mean", "mean prime gap ~ ln p near 1e6", report.gap_relative_error(), 0.05);
        ledger.add("gap_eq55", "mean (gap/p) pi(p) ~ 1 near 1e6", std::abs(report.eq55_statistic - 1.0), 0.1);
    }

    {
        double violations = 0;
        for (std::size_t i = 0; i < 3; ++i) {
            const Complex s{0.5, zeros[i].gamma};
            if (!(odd_even_split_residual(s, 1'000'000, jobs) < odd_even_split_residual(s, 10'000, jobs))) {
                ++violations;
            }
        }
        ledger.add("odd_even_split_trend", "odd and even sums balance at zeros (residual falls 1e4 -> 1e6)",
                   violations, 0);
    }

    {
        const auto rows = compare_to_actual(2, 29, 2, zeros);
        const auto again = compare_to_actual(2, 29, 2, zeros);
        double incomplete = rows.size() == 28 ? 0 : 1;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (!rows[i].rel_dev_index || !rows[i].rel_dev_nearest || rows[i].predicted_y != again[i].predicted_y) {
                ++incomplete;
            }
        }
        ledger.add("prediction_table", "deviation table for n = 2..29, k = 2 (no agreement asserted)", incomplete, 0);

        const PrimeTable primes = sieve_primes(120'000, jobs);
        double worst = 0.0;
        for (std::size_t i = primes.count_up_to(99'999); i + 1 < primes.count(); ++i) {
            const std::uint32_t p = primes.primes[i];
            const std::uint32_t q = primes.primes[i + 1];
            const double pair = predicted_y_prime_pair(p, q, 2);
            const double gap = predicted_y_gap_form(p, q - p, 2);
            worst = std::max(worst, std::abs(pair - gap) / gap);
        }
        ledger.add("pair_vs_gap_form", "k pi / ln(q/p) vs k pi p / (q - p), primes in [1e5, 1.2e5]", worst, 0.005);

        double nonlinear = 0.0;
        for (int k = 1; k <= 6; ++k) {
            nonlinear = std::max({nonlinear,
                                  std::abs(predicted_y_asymptotic(29, k) - k * predicted_y_asymptotic(29, 1)),
                                  std::abs(predicted_y_prime_pair(2, 3, k) - k * predicted_y_prime_pair(2, 3, 1)),
                                  std::abs(predicted_y_gap_form(1'000'003, 14.0, k) -
                                           k * predicted_y_gap_form(1'000'003, 14.0, 1))});
        }
        ledger.add("k_linearity", "predicted ordinates are linear in k", nonlinear, 0);
    }

    {
        double mismatches = 0;
        for (const Subcommand sub : {Subcommand::ratios, Subcommand::zeros, Subcommand::compare}) {
            RunConfig one;
            one.subcommand = sub;
            one.jobs = 1;
            RunConfig four = one;
            four.jobs = 4;
            if (serialize(one) != serialize(four)) {
                ++mismatches;
            }
        }
        ledger.add("determinism_jobs", "ratios, zeros and compare outputs byte-identical for 1 and 4 jobs",
                   mismatches, 0);
    }

    return ledger.take();
}

} // namespace zetaforge
