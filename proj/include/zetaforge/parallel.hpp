#pragma once

/// @file parallel.hpp
/// @brief Deterministic data-parallel summation.
///
/// Index ranges are cut into fixed-size chunks that do not depend on the
/// worker count. Each chunk is summed with Neumaier compensation and the
/// chunk totals are reduced in ascending order, so results are bit-identical
/// for any number of threads.

#include <algorithm>
#include <complex>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <thread>
#include <vector>

namespace zetaforge {

inline constexpr std::uint64_t kSumChunk = std::uint64_t{1} << 15;

/// 0 means "all hardware threads".
inline std::size_t resolve_jobs(std::size_t jobs) noexcept {
    if (jobs != 0) {
        return jobs;
    }
    return std::max<std::size_t>(1, std::thread::hardware_concurrency());
}

/// Neumaier's variant of Kahan summation.
class CompensatedSum {
public:
    void add(double x) noexcept {
        const double t = sum_ + x;
        if (std::fabs(sum_) >= std::fabs(x)) {
            comp_ += (sum_ - t) + x;
        } else {
            comp_ += (x - t) + sum_;
        }
        sum_ = t;
    }
    double value() const noexcept { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

class CompensatedComplexSum {
public:
    void add(std::complex<double> z) noexcept {
        re_.add(z.real());
        im_.add(z.imag());
    }
    std::complex<double> value() const noexcept { return {re_.value(), im_.value()}; }

private:
    CompensatedSum re_;
    CompensatedSum im_;
};

/// Runs body(i) for i in [0, count) on up to `jobs` threads. Work is
/// assigned round-robin; body must write only to its own slot.
template <class Body>
void parallel_for(std::size_t count, std::size_t jobs, Body&& body) {
    const std::size_t workers = std::min(resolve_jobs(jobs), std::max<std::size_t>(count, 1));
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) {
            body(i);
        }
        return;
    }
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (std::size_t i = w; i < count; i += workers) {
                body(i);
            }
        });
    }
}

/// Sum of term(n) for n in [first, last], compensated and deterministic.
template <class Term>
std::complex<double> chunked_sum(std::uint64_t first, std::uint64_t last, Term&& term,
                                 std::size_t jobs) {
    if (last < first) {
        return {0.0, 0.0};
    }
    const std::uint64_t span = last - first + 1;
    const std::size_t chunks = static_cast<std::size_t>((span + kSumChunk - 1) / kSumChunk);
    std::vector<std::complex<double>> partial(chunks);
    parallel_for(chunks, jobs, [&](std::size_t c) {
        const std::uint64_t lo = first + static_cast<std::uint64_t>(c) * kSumChunk;
        const std::uint64_t hi = std::min(last, lo + kSumChunk - 1);
        CompensatedComplexSum acc;
        for (std::uint64_t n = lo; n <= hi; ++n) {
            acc.add(term(n));
        }
        partial[c] = acc.value();
    });
    CompensatedComplexSum total;
    for (const auto& p : partial) {
        total.add(p);
    }
    return total.value();
}

} // namespace zetaforge
