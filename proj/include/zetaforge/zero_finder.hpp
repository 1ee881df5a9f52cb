#pragma once

/// @file zero_finder.hpp
/// @brief Critical-line zeros from Hardy-Z sign changes, with a
/// counting-formula completeness check and a line-delimited JSON cache.

#include <cstddef>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace zetaforge {

enum class ZeroMethod { sign_change_bisection };

std::string_view to_string(ZeroMethod method) noexcept;

struct ZeroRecord {
    int k = 0;          ///< 1-based, ascending ordinate within the scan
    double gamma = 0.0; ///< ordinate
    double residual = 0.0; ///< |zeta(1/2 + i gamma)|
    ZeroMethod method = ZeroMethod::sign_change_bisection;
};

struct ScanConfig {
    double t_min = 2.0;
    double t_max = 100.0;
    double step = 0.01;
    double tol = 1e-8;
    int refine_iters = 200;

    /// Throws DomainError unless 2 <= t_min < t_max <= 150, 0 < step <= 0.05,
    /// tol >= 1e-10 and refine_iters >= 1.
    void validate() const;
};

struct HardyZValue {
    double z = 0.0;
    /// Imaginary part left after the theta rotation; ~0 when theta and
    /// zeta are mutually consistent.
    double rotated_imag = 0.0;
};

inline constexpr double kHardyZSelfCheck = 1e-5;

/// Z(y) = Re[e^{i theta(y)} zeta(1/2 + iy)] for 2 <= y <= 150. theta is the
/// asymptotic series for y >= 10 and the log-gamma phase below. Throws
/// SelfCheckError if the rotated imaginary part exceeds 1e-5.
HardyZValue hardy_z_detail(double y);
double hardy_z(double y);

/// (T/2pi) ln(T/2pi) - T/2pi + 7/8. Throws DomainError for T < 2.
double zero_count_estimate(double t);

/// Zeros in (t_min, t_max]. If the count disagrees with the counting
/// formula by 1 or more, the step is halved (up to four times) before a
/// CompletenessError is thrown.
std::vector<ZeroRecord> scan_zeros(const ScanConfig& config, std::size_t jobs = 1);

/// One cache line (no trailing newline), keys in fixed order.
std::string zero_cache_line(const ZeroRecord& record, double tol);

/// Parses one cache line. Throws CacheError on malformed input.
struct CachedZero {
    ZeroRecord record;
    double tol = 0.0;
};
CachedZero parse_zero_cache_line(std::string_view line);

/// Appends records whose index is not already cached. Returns the number
/// of lines written.
std::size_t append_zero_cache(const std::filesystem::path& path, std::span<const ZeroRecord> records,
                              double tol);

/// Loads and re-validates a cache: each residual is recomputed and must be
/// within the stored tolerance; indices must run 1, 2, ... with ascending
/// ordinates. A missing file yields an empty list.
std::vector<ZeroRecord> load_zero_cache(const std::filesystem::path& path);

} // namespace zetaforge
