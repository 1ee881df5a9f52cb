#include "zetaforge/prediction.hpp"

#include "zetaforge/errors.hpp"
#include "zetaforge/numerics.hpp"

#include <algorithm>
#include <cmath>

namespace zetaforge {

namespace {

constexpr const char* kModule = "prediction_eval";
constexpr std::size_t kMinGapSample = 30;

void require_k(int k, const char* op) {
    if (k < 1) {
        throw DomainError(kModule, op, "k must be >= 1");
    }
}

std::optional<double> nearest_gamma(std::span<const ZeroRecord> zeros, double y) {
    if (zeros.empty()) {
        return std::nullopt;
    }
    const auto it = std::lower_bound(zeros.begin(), zeros.end(), y,
                                     [](const ZeroRecord& r, double v) { return r.gamma < v; });
    if (it == zeros.begin()) {
        return it->gamma;
    }
    if (it == zeros.end()) {
        return std::prev(it)->gamma;
    }
    const double above = it->gamma;
    const double below = std::prev(it)->gamma;
    // Ties resolve downward.
    return (above - y) < (y - below) ? above : below;
}

} // namespace

double GapLawReport::gap_relative_error() const {
    return std::abs(mean_gap / predicted_gap - 1.0);
}

double predicted_y_prime_pair(std::uint64_t p, std::uint64_t q, int k) {
    require_k(k, "predicted_y_prime_pair");
    if (q <= p) {
        throw DomainError(kModule, "predicted_y_prime_pair", "requires q > p");
    }
    if (!is_prime(p) || !is_prime(q)) {
        throw DomainError(kModule, "predicted_y_prime_pair", "p and q must be prime");
    }
    const double base = kPi / std::log(static_cast<double>(q) / static_cast<double>(p));
    return k * base;
}

double predicted_y_gap_form(std::uint64_t p, double gap, int k) {
    require_k(k, "predicted_y_gap_form");
    if (!(gap > 0.0) || p < 2) {
        throw DomainError(kModule, "predicted_y_gap_form", "requires gap > 0 and p >= 2");
    }
    const double base = kPi * static_cast<double>(p) / gap;
    return k * base;
}

double predicted_y_asymptotic(std::uint64_t n, int k) {
    require_k(k, "predicted_y_asymptotic");
    if (n < 2) {
        throw DomainError(kModule, "predicted_y_asymptotic", "requires n >= 2");
    }
    const auto x = static_cast<double>(n);
    const double base = kPi * x / std::log(x);
    return k * base;
}

double predicted_y_prime_order(std::uint64_t n, int k) {
    require_k(k, "predicted_y_prime_order");
    const double base = kPi * static_cast<double>(n);
    return k * base;
}

std::vector<PredictionRow> compare_to_actual(std::uint64_t n_min, std::uint64_t n_max, int k,
                                             std::span<const ZeroRecord> zeros) {
    if (n_min < 2 || n_max < n_min) {
        throw DomainError(kModule, "compare_to_actual", "requires 2 <= n_min <= n_max");
    }
    std::vector<PredictionRow> rows;
    rows.reserve(n_max - n_min + 1);
    for (std::uint64_t n = n_min; n <= n_max; ++n) {
        PredictionRow row;
        row.n = n;
        row.k_mode = k;
        row.predicted_y = predicted_y_asymptotic(n, k);
        if (n <= zeros.size()) {
            const double gamma = zeros[n - 1].gamma;
            row.gamma_by_index = gamma;
            row.rel_dev_index = std::abs(row.predicted_y - gamma) / gamma;
        }
        if (const auto gamma = nearest_gamma(zeros, row.predicted_y)) {
            row.gamma_nearest = *gamma;
            row.rel_dev_nearest = std::abs(row.predicted_y - *gamma) / *gamma;
        }
        rows.push_back(row);
    }
    return rows;
}

std::vector<KSweepRow> sweep_k(std::uint64_t n_min, std::uint64_t n_max, int k_max,
                               std::span<const ZeroRecord> zeros) {
    std::vector<KSweepRow> out;
    for (int k = 1; k <= k_max; ++k) {
        KSweepRow summary;
        summary.k = k;
        double index_sum = 0.0;
        double nearest_sum = 0.0;
        std::size_t nearest_count = 0;
        for (const auto& row : compare_to_actual(n_min, n_max, k, zeros)) {
            if (row.rel_dev_index) {
                index_sum += *row.rel_dev_index;
                ++summary.matched;
            }
            if (row.rel_dev_nearest) {
                nearest_sum += *row.rel_dev_nearest;
                ++nearest_count;
            }
        }
        summary.mean_rel_dev_index = summary.matched ? index_sum / summary.matched : NAN;
        summary.mean_rel_dev_nearest = nearest_count ? nearest_sum / nearest_count : NAN;
        out.push_back(summary);
    }
    return out;
}

GapLawReport gap_law_report(const PrimeTable& table, std::uint64_t center, std::uint64_t window) {
    const GapStats stats = gap_stats(table, center, window);
    if (stats.sample_size < kMinGapSample) {
        throw DomainError(kModule, "gap_law_report", "fewer than 30 gaps in the window");
    }
    GapLawReport report;
    report.center = static_cast<double>(center);
    report.window = static_cast<double>(window);
    report.mean_gap = stats.mean_gap;
    report.predicted_gap = std::log(report.center);
    report.eq55_statistic = stats.eq55_statistic;
    report.sample_size = stats.sample_size;
    report.max_gap = stats.max_gap;
    return report;
}

GapLawReport gap_law_report(std::uint64_t center, std::uint64_t window, std::size_t jobs) {
    if (center < window + 2) {
        throw DomainError(kModule, "gap_law_report", "window must start at 2 or above");
    }
    return gap_law_report(sieve_primes(center + window, jobs), center, window);
}

PrimeLocation prime_location_condition(double gamma) {
    if (!(gamma > 0.0)) {
        throw DomainError(kModule, "prime_location_condition", "requires gamma > 0");
    }
    PrimeLocation out;
    out.ratio = gamma / (2.0 * kPi);
    out.nearest_int = std::llround(out.ratio);
    out.distance = std::abs(out.ratio - static_cast<double>(out.nearest_int));
    return out;
}

} // namespace zetaforge
