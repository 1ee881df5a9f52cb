#include "zetaforge/sieve.hpp"

#include "zetaforge/errors.hpp"
#include "zetaforge/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace zetaforge {

namespace {

constexpr std::uint64_t kPlainSieveLimit = 10'000'000;
// Odd numbers per segment.
constexpr std::uint64_t kSegmentOdds = std::uint64_t{1} << 18;

// Odd-only Eratosthenes; bit i stands for 2i + 1.
std::vector<std::uint32_t> plain_sieve(std::uint64_t limit) {
    std::vector<std::uint32_t> primes;
    if (limit < 2) {
        return primes;
    }
    primes.push_back(2);
    const std::uint64_t odds = (limit - 1) / 2 + 1;
    std::vector<bool> composite(odds, false);
    for (std::uint64_t i = 1; i < odds; ++i) {
        if (composite[i]) {
            continue;
        }
        const std::uint64_t p = 2 * i + 1;
        primes.push_back(static_cast<std::uint32_t>(p));
        for (std::uint64_t m = p * p; m <= limit; m += 2 * p) {
            composite[m / 2] = true;
        }
    }
    return primes;
}

std::vector<std::uint32_t> segmented_sieve(std::uint64_t limit, std::size_t jobs) {
    const auto root = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(limit))) + 1;
    const std::vector<std::uint32_t> base = plain_sieve(root);

    const std::uint64_t odds = (limit - 1) / 2 + 1; // odd numbers 1, 3, ..., <= limit
    const std::size_t segments = static_cast<std::size_t>((odds + kSegmentOdds - 1) / kSegmentOdds);
    std::vector<std::vector<std::uint32_t>> found(segments);

    parallel_for(segments, jobs, [&](std::size_t seg) {
        const std::uint64_t first_odd = seg * kSegmentOdds;
        const std::uint64_t last_odd = std::min(odds, first_odd + kSegmentOdds) - 1;
        const std::uint64_t lo = 2 * first_odd + 1;
        const std::uint64_t hi = 2 * last_odd + 1;
        std::vector<bool> composite(last_odd - first_odd + 1, false);
        for (std::size_t b = 1; b < base.size(); ++b) {
            const std::uint64_t p = base[b];
            if (p * p > hi) {
                break;
            }
            std::uint64_t start = std::max(p * p, (lo + p - 1) / p * p);
            if (start % 2 == 0) {
                start += p;
            }
            for (std::uint64_t m = start; m <= hi; m += 2 * p) {
                composite[(m - lo) / 2] = true;
            }
        }
        auto& out = found[seg];
        for (std::uint64_t i = 0; i < composite.size(); ++i) {
            const std::uint64_t n = lo + 2 * i;
            if (n > 1 && !composite[i]) {
                out.push_back(static_cast<std::uint32_t>(n));
            }
        }
    });

    std::vector<std::uint32_t> primes{2};
    for (const auto& part : found) {
        primes.insert(primes.end(), part.begin(), part.end());
    }
    return primes;
}

std::uint64_t nth_prime_upper_bound(std::size_t n) {
    if (n < 6) {
        return 13;
    }
    const double x = static_cast<double>(n);
    return static_cast<std::uint64_t>(x * (std::log(x) + std::log(std::log(x)))) + 1;
}

void check_ratio_index(std::size_t n, const char* op) {
    if (n < 1 || n > kMaxRatioIndex) {
        throw DomainError("sieve_core", op, "index must lie in [1, 10000], got " + std::to_string(n));
    }
}

} // namespace

std::size_t PrimeTable::count_up_to(std::uint64_t x) const noexcept {
    return static_cast<std::size_t>(std::upper_bound(primes.begin(), primes.end(), x) - primes.begin());
}

PrimeTable sieve_primes(std::uint64_t limit, std::size_t jobs) {
    if (limit < 2 || limit > kMaxSieveLimit) {
        throw DomainError("sieve_core", "sieve_primes",
                          "limit must lie in [2, 10^8], got " + std::to_string(limit));
    }
    PrimeTable table;
    table.limit = limit;
    table.primes = limit <= kPlainSieveLimit ? plain_sieve(limit) : segmented_sieve(limit, jobs);
    return table;
}

std::vector<std::uint32_t> first_primes(std::size_t count) {
    if (count == 0) {
        return {};
    }
    std::vector<std::uint32_t> primes = plain_sieve(nth_prime_upper_bound(count));
    primes.resize(count);
    return primes;
}

SmallestFactorTable::SmallestFactorTable(std::uint32_t limit) : limit_(limit), spf_(std::size_t{limit} + 1, 0) {
    for (std::uint64_t i = 2; i <= limit; ++i) {
        if (spf_[i] == 0) {
            spf_[i] = static_cast<std::uint32_t>(i);
            primes_.push_back(static_cast<std::uint32_t>(i));
        }
        const std::uint32_t lp = spf_[i];
        for (const std::uint32_t p : primes_) {
            if (p > lp || i * p > limit) {
                break;
            }
            spf_[i * p] = p;
        }
    }
}

std::vector<RatioTerm> removal_ratios(std::size_t count) {
    if (count == 0) {
        return {};
    }
    check_ratio_index(count, "removal_ratios");
    const auto primes = first_primes(count);
    std::vector<RatioTerm> out;
    out.reserve(count);
    BigInt survivors = 1; // prod_{k<n} (P_k - 1)
    BigInt modulus = 1;   // prod_{k<n} P_k
    for (std::size_t i = 0; i < count; ++i) {
        const std::uint32_t p = primes[i];
        out.push_back(RatioTerm{i + 1, p, Rational(survivors, modulus * p)});
        survivors *= p - 1;
        modulus *= p;
    }
    return out;
}

RatioTerm removal_ratio(std::size_t n) {
    check_ratio_index(n, "removal_ratio");
    const auto primes = first_primes(n);
    BigInt survivors = 1;
    BigInt modulus = 1;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        survivors *= primes[i] - 1;
        modulus *= primes[i];
    }
    return RatioTerm{n, primes[n - 1], Rational(survivors, modulus * primes[n - 1])};
}

Rational ratio_partial_sum(std::size_t n) {
    check_ratio_index(n, "ratio_partial_sum");
    const auto primes = first_primes(n);
    // Running sum A/D over the common denominator D = prod P_k.
    BigInt numerator = 0;
    BigInt survivors = 1;
    BigInt denominator = 1;
    for (const std::uint32_t p : primes) {
        numerator = numerator * p + survivors;
        survivors *= p - 1;
        denominator *= p;
    }
    return Rational(numerator, denominator);
}

Rational survivor_product(std::size_t n) {
    check_ratio_index(n, "survivor_product");
    Rational product = 1;
    for (const std::uint32_t p : first_primes(n)) {
        product *= Rational(p - 1, p);
    }
    return product;
}

std::vector<SiftedClass> empirical_sift(const SmallestFactorTable& table) {
    const auto& primes = table.primes();
    std::vector<SiftedClass> classes(primes.size());
    for (std::size_t i = 0; i < primes.size(); ++i) {
        classes[i].p = primes[i];
    }
    for (std::uint32_t m = 2; m <= table.limit(); ++m) {
        const std::uint32_t p = table[m];
        const auto idx = static_cast<std::size_t>(std::lower_bound(primes.begin(), primes.end(), p) - primes.begin());
        auto& cls = classes[idx];
        ++cls.members_count;
        cls.largest_member = m;
    }
    return classes;
}

std::vector<SiftedClass> empirical_sift(std::uint32_t limit) {
    if (limit < 1 || limit > kMaxSiftLimit) {
        throw DomainError("sieve_core", "empirical_sift",
                          "limit must lie in [1, 10^7], got " + std::to_string(limit));
    }
    return empirical_sift(SmallestFactorTable(limit));
}

double pi_approx(std::uint64_t n) {
    if (n < 2) {
        throw DomainError("sieve_core", "pi_approx", "requires N >= 2");
    }
    const double x = static_cast<double>(n);
    return x / std::log(x);
}

GapStats gap_stats(const PrimeTable& table, std::uint64_t center, std::uint64_t window) {
    if (center < window + 2) {
        throw DomainError("sieve_core", "gap_stats", "window must start at 2 or above");
    }
    if (center + window > table.limit) {
        throw DomainError("sieve_core", "gap_stats", "window extends past the sieve limit");
    }
    const auto& primes = table.primes;
    const auto first = std::lower_bound(primes.begin(), primes.end(), center - window);
    const auto last = std::upper_bound(primes.begin(), primes.end(), center + window);
    if (last - first < 2) {
        throw DomainError("sieve_core", "gap_stats", "window holds fewer than two primes");
    }
    GapStats stats;
    stats.center = center;
    stats.window = window;
    CompensatedSum gap_sum;
    CompensatedSum eq55_sum;
    for (auto it = first; it + 1 != last; ++it) {
        const std::uint32_t gap = *(it + 1) - *it;
        const auto order = static_cast<double>(it - primes.begin() + 1);
        gap_sum.add(gap);
        eq55_sum.add(static_cast<double>(gap) / static_cast<double>(*it) * order);
        stats.max_gap = std::max(stats.max_gap, gap);
        ++stats.sample_size;
    }
    const auto n = static_cast<double>(stats.sample_size);
    stats.mean_gap = gap_sum.value() / n;
    stats.eq55_statistic = eq55_sum.value() / n;
    return stats;
}

GapStats gap_stats(std::uint64_t center, std::uint64_t window, std::size_t jobs) {
    return gap_stats(sieve_primes(center + window, jobs), center, window);
}

bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) {
        return false;
    }
    if (n % 2 == 0) {
        return n == 2;
    }
    for (std::uint64_t d = 3; d * d <= n; d += 2) {
        if (n % d == 0) {
            return false;
        }
    }
    return true;
}

} // namespace zetaforge
