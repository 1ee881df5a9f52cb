#include "zetaforge/zero_finder.hpp"

#include "zetaforge/errors.hpp"
#include "zetaforge/eta_zeta.hpp"
#include "zetaforge/parallel.hpp"

#include <json.hpp>

#include <cmath>
#include <fstream>
#include <limits>
#include <set>
#include <string>

namespace zetaforge {

namespace {

constexpr const char* kModule = "zero_finder";
constexpr double kZetaTol = 1e-12;
constexpr double kThetaSeriesFrom = 10.0;
constexpr int kMaxStepHalvings = 4;
constexpr int kCacheVersion = 1;

// Below 2 pi e the main term is under 7/8 and carries no count information.
double lower_count(double t_min) {
    const double knee = 2.0 * kPi * std::exp(1.0);
    return t_min > knee ? zero_count_estimate(t_min) : 0.0;
}

double bisect(double a, double b, double fa, int max_iters) {
    for (int iter = 0; iter < max_iters; ++iter) {
        const double mid = 0.5 * (a + b);
        if (mid <= a || mid >= b) {
            break;
        }
        const double fm = hardy_z(mid);
        if (fm == 0.0) {
            return mid;
        }
        if ((fm < 0.0) == (fa < 0.0)) {
            a = mid;
            fa = fm;
        } else {
            b = mid;
        }
    }
    return 0.5 * (a + b);
}

std::vector<ZeroRecord> scan_with_step(const ScanConfig& config, double step, std::size_t jobs) {
    const auto intervals = static_cast<std::size_t>(std::ceil((config.t_max - config.t_min) / step));
    std::vector<double> grid(intervals + 1);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        grid[i] = i == intervals ? config.t_max : config.t_min + static_cast<double>(i) * step;
    }
    std::vector<double> values(grid.size());
    parallel_for(grid.size(), jobs, [&](std::size_t i) { values[i] = hardy_z(grid[i]); });

    struct Bracket {
        double a, b, fa;
    };
    std::vector<Bracket> brackets;
    for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
        if (values[i + 1] == 0.0) {
            brackets.push_back({grid[i + 1], grid[i + 1], 0.0});
        } else if (values[i] * values[i + 1] < 0.0) {
            brackets.push_back({grid[i], grid[i + 1], values[i]});
        }
    }

    std::vector<ZeroRecord> records(brackets.size());
    parallel_for(brackets.size(), jobs, [&](std::size_t i) {
        const auto& br = brackets[i];
        const double gamma = br.a == br.b ? br.a : bisect(br.a, br.b, br.fa, config.refine_iters);
        const double residual = std::abs(zeta_from_eta(Complex{0.5, gamma}, kZetaTol).value);
        records[i] = ZeroRecord{static_cast<int>(i) + 1, gamma, residual, ZeroMethod::sign_change_bisection};
    });
    for (const auto& r : records) {
        if (!(r.residual <= config.tol)) {
            throw ConvergenceError(kModule, "scan_zeros",
                                   "zero near " + std::to_string(r.gamma) + " has residual " +
                                       std::to_string(r.residual) + " above tol");
        }
    }
    return records;
}

} // namespace

std::string_view to_string(ZeroMethod method) noexcept {
    switch (method) {
    case ZeroMethod::sign_change_bisection:
        return "sign-change-bisection";
    }
    return "unknown";
}

void ScanConfig::validate() const {
    if (!(t_min >= 2.0 && t_max > t_min && t_max <= kMaxAcceleratedHeight)) {
        throw DomainError(kModule, "ScanConfig", "requires 2 <= t_min < t_max <= 150");
    }
    if (!(step > 0.0 && step <= 0.05)) {
        throw DomainError(kModule, "ScanConfig", "step must lie in (0, 0.05]");
    }
    if (!(tol >= 1e-10)) {
        throw DomainError(kModule, "ScanConfig", "tol must be >= 1e-10");
    }
    if (refine_iters < 1) {
        throw DomainError(kModule, "ScanConfig", "refine_iters must be >= 1");
    }
}

HardyZValue hardy_z_detail(double y) {
    if (!(y >= 2.0 && y <= kMaxAcceleratedHeight)) {
        throw DomainError(kModule, "hardy_z", "requires 2 <= y <= 150");
    }
    const double theta = y >= kThetaSeriesFrom ? rs_theta(y) : rs_theta_exact(y);
    const Complex zeta = zeta_from_eta(Complex{0.5, y}, kZetaTol).value;
    const Complex rotated = std::polar(1.0, theta) * zeta;
    if (std::abs(rotated.imag()) > kHardyZSelfCheck) {
        throw SelfCheckError(kModule, "hardy_z",
                             "rotated imaginary part " + std::to_string(rotated.imag()) + " at y = " +
                                 std::to_string(y));
    }
    return HardyZValue{rotated.real(), rotated.imag()};
}

double hardy_z(double y) {
    return hardy_z_detail(y).z;
}

double zero_count_estimate(double t) {
    if (!(t >= 2.0)) {
        throw DomainError(kModule, "zero_count_estimate", "requires T >= 2");
    }
    const double u = t / (2.0 * kPi);
    return u * std::log(u) - u + 7.0 / 8.0;
}

std::vector<ZeroRecord> scan_zeros(const ScanConfig& config, std::size_t jobs) {
    config.validate();
    const double expected = zero_count_estimate(config.t_max) - lower_count(config.t_min);
    double step = config.step;
    for (int attempt = 0; attempt <= kMaxStepHalvings; ++attempt, step *= 0.5) {
        auto records = scan_with_step(config, step, jobs);
        if (std::abs(static_cast<double>(records.size()) - expected) < 1.0) {
            return records;
        }
    }
    throw CompletenessError(kModule, "scan_zeros",
                            "zero count disagrees with the counting formula (expected ~" +
                                std::to_string(expected) + ") after step halving");
}

std::string zero_cache_line(const ZeroRecord& record, double tol) {
    nlohmann::ordered_json j;
    j["k"] = record.k;
    j["gamma"] = record.gamma;
    j["residual"] = record.residual;
    j["tol"] = tol;
    j["method"] = to_string(record.method);
    j["version"] = kCacheVersion;
    return j.dump();
}

CachedZero parse_zero_cache_line(std::string_view line) {
    try {
        const auto j = nlohmann::json::parse(line);
        if (j.at("version").get<int>() != kCacheVersion) {
            throw CacheError(kModule, "load_zero_cache", "unsupported cache version");
        }
        if (j.at("method").get<std::string>() != to_string(ZeroMethod::sign_change_bisection)) {
            throw CacheError(kModule, "load_zero_cache", "unknown method tag");
        }
        CachedZero out;
        out.record.k = j.at("k").get<int>();
        out.record.gamma = j.at("gamma").get<double>();
        out.record.residual = j.at("residual").get<double>();
        out.record.method = ZeroMethod::sign_change_bisection;
        out.tol = j.at("tol").get<double>();
        return out;
    } catch (const nlohmann::json::exception& e) {
        throw CacheError(kModule, "load_zero_cache", std::string("malformed line: ") + e.what());
    }
}

namespace {

std::vector<CachedZero> read_cache_lines(const std::filesystem::path& path) {
    std::vector<CachedZero> out;
    std::ifstream in(path);
    if (!in) {
        return out;
    }
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty()) {
            out.push_back(parse_zero_cache_line(line));
        }
    }
    return out;
}

} // namespace

std::size_t append_zero_cache(const std::filesystem::path& path, std::span<const ZeroRecord> records,
                              double tol) {
    std::set<int> cached;
    for (const auto& entry : read_cache_lines(path)) {
        cached.insert(entry.record.k);
    }
    std::ofstream out(path, std::ios::app | std::ios::binary);
    if (!out) {
        throw CacheError(kModule, "append_zero_cache", "cannot open " + path.string());
    }
    std::size_t written = 0;
    for (const auto& r : records) {
        if (cached.insert(r.k).second) {
            out << zero_cache_line(r, tol) << '\n';
            ++written;
        }
    }
    return written;
}

std::vector<ZeroRecord> load_zero_cache(const std::filesystem::path& path) {
    std::vector<ZeroRecord> records;
    for (const auto& entry : read_cache_lines(path)) {
        const auto& r = entry.record;
        if (r.k != static_cast<int>(records.size()) + 1) {
            throw CacheError(kModule, "load_zero_cache", "indices are not contiguous from 1");
        }
        if (!records.empty() && !(r.gamma > records.back().gamma)) {
            throw CacheError(kModule, "load_zero_cache", "ordinates are not strictly ascending");
        }
        const double residual = std::abs(zeta_from_eta(Complex{0.5, r.gamma}, kZetaTol).value);
        if (!(residual <= entry.tol)) {
            throw CacheError(kModule, "load_zero_cache",
                             "residual re-check failed for k = " + std::to_string(r.k));
        }
        records.push_back(r);
    }
    return records;
}

} // namespace zetaforge
