#pragma once

/// @file prediction.hpp
/// @brief Predicted zero ordinates from prime data, and their comparison
/// with scanned zeros.

#include "zetaforge/sieve.hpp"
#include "zetaforge/zero_finder.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace zetaforge {

struct PredictionRow {
    std::uint64_t n = 0;
    int k_mode = 2;
    double predicted_y = 0.0;
    std::optional<double> gamma_by_index;
    std::optional<double> rel_dev_index;
    std::optional<double> gamma_nearest;
    std::optional<double> rel_dev_nearest;
};

struct GapLawReport {
    double center = 0.0;
    double window = 0.0;
    double mean_gap = 0.0;
    double predicted_gap = 0.0; ///< ln center
    double eq55_statistic = 0.0;
    std::size_t sample_size = 0;
    std::uint32_t max_gap = 0;

    /// |mean_gap / predicted_gap - 1|
    double gap_relative_error() const;
};

struct PrimeLocation {
    double ratio = 0.0; ///< gamma / 2pi
    long long nearest_int = 0;
    double distance = 0.0;
};

/// k pi / ln(q/p); q the prime after p (both checked prime, q > p).
double predicted_y_prime_pair(std::uint64_t p, std::uint64_t q, int k);

/// k pi p / gap.
double predicted_y_gap_form(std::uint64_t p, double gap, int k);

/// k pi n / ln n, n >= 2.
double predicted_y_asymptotic(std::uint64_t n, int k);

/// n k pi, with n the order of a prime.
double predicted_y_prime_order(std::uint64_t n, int k);

/// One row per n in [n_min, n_max], matched to zeros[n-1] by index and to
/// the nearest ordinate. Absent matches are left empty.
std::vector<PredictionRow> compare_to_actual(std::uint64_t n_min, std::uint64_t n_max, int k,
                                             std::span<const ZeroRecord> zeros);

struct KSweepRow {
    int k = 0;
    std::size_t matched = 0;
    double mean_rel_dev_index = 0.0;
    double mean_rel_dev_nearest = 0.0;
};

/// compare_to_actual for k = 1..k_max, summarised.
std::vector<KSweepRow> sweep_k(std::uint64_t n_min, std::uint64_t n_max, int k_max,
                               std::span<const ZeroRecord> zeros);

/// Throws DomainError when fewer than 30 gaps fall in the window.
GapLawReport gap_law_report(const PrimeTable& table, std::uint64_t center, std::uint64_t window);
GapLawReport gap_law_report(std::uint64_t center, std::uint64_t window, std::size_t jobs = 1);

/// gamma / 2pi and its distance to the nearest integer. Diagnostic only.
PrimeLocation prime_location_condition(double gamma);

} // namespace zetaforge
