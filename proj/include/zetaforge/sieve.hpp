#pragma once

/// @file sieve.hpp
/// @brief Exact primes, smallest-prime-factor classes, removal ratios and
/// prime-gap statistics.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace zetaforge {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline constexpr std::uint64_t kMaxSieveLimit = 100'000'000;
inline constexpr std::uint64_t kMaxSiftLimit = 10'000'000;
inline constexpr std::size_t kMaxRatioIndex = 10'000;

/// All primes up to `limit`, ascending.
struct PrimeTable {
    std::uint64_t limit = 0;
    std::vector<std::uint32_t> primes;

    std::size_t count() const noexcept { return primes.size(); }

    /// pi(x) for x <= limit.
    std::size_t count_up_to(std::uint64_t x) const noexcept;
};

/// Sieve of Eratosthenes over odd numbers. Limits above 10^7 are sieved in
/// fixed segments, one segment per task. Throws DomainError unless
/// 2 <= limit <= 10^8.
PrimeTable sieve_primes(std::uint64_t limit, std::size_t jobs = 1);

/// The first `count` primes.
std::vector<std::uint32_t> first_primes(std::size_t count);

/// Smallest prime factor of every n in [2, limit], from a linear sieve.
class SmallestFactorTable {
public:
    explicit SmallestFactorTable(std::uint32_t limit);

    std::uint32_t limit() const noexcept { return limit_; }

    /// Smallest prime factor of n, 2 <= n <= limit.
    std::uint32_t operator[](std::uint32_t n) const noexcept { return spf_[n]; }

    const std::vector<std::uint32_t>& primes() const noexcept { return primes_; }

private:
    std::uint32_t limit_;
    std::vector<std::uint32_t> spf_;
    std::vector<std::uint32_t> primes_;
};

/// Integers m in [2, N] whose smallest prime factor is p.
struct SiftedClass {
    std::uint32_t p = 0;
    std::uint64_t members_count = 0;
    std::uint32_t largest_member = 0;
};

/// Removal ratio (1/P_n) * prod_{k<n} (1 - 1/P_k), exact.
struct RatioTerm {
    std::size_t n = 0;
    std::uint32_t prime = 0;
    Rational value;
};

/// Throws DomainError unless 1 <= n <= 10^4.
RatioTerm removal_ratio(std::size_t n);

/// removal_ratio(1..count), computed incrementally.
std::vector<RatioTerm> removal_ratios(std::size_t count);

/// Sum of removal_ratio(m) for m <= n, accumulated term by term.
Rational ratio_partial_sum(std::size_t n);

/// prod_{k<=n} (1 - 1/P_k), multiplied factor by factor.
Rational survivor_product(std::size_t n);

/// Partition of {2..N} by smallest prime factor, one class per prime <= N
/// in ascending order. Throws DomainError unless 1 <= N <= 10^7.
std::vector<SiftedClass> empirical_sift(std::uint32_t limit);
std::vector<SiftedClass> empirical_sift(const SmallestFactorTable& table);

/// N / ln N. Throws DomainError for N < 2.
double pi_approx(std::uint64_t n);

struct GapStats {
    std::uint64_t center = 0;
    std::uint64_t window = 0;
    double mean_gap = 0.0;
    std::uint32_t max_gap = 0;
    /// Number of consecutive-prime gaps inside the window.
    std::size_t sample_size = 0;
    /// Mean of (gap / p) * pi(p) over the window.
    double eq55_statistic = 0.0;
};

/// Gap statistics over primes in [center - window, center + window].
/// Throws DomainError if the window leaves [2, table.limit] or holds fewer
/// than two primes.
GapStats gap_stats(const PrimeTable& table, std::uint64_t center, std::uint64_t window);
GapStats gap_stats(std::uint64_t center, std::uint64_t window, std::size_t jobs = 1);

/// Trial division; for argument checking only.
bool is_prime(std::uint64_t n) noexcept;

} // namespace zetaforge
