#include "zetaforge/report.hpp"

#include "zetaforge/errors.hpp"
#include "zetaforge/eta_zeta.hpp"
#include "zetaforge/lambda.hpp"
#include "zetaforge/prediction.hpp"
#include "zetaforge/sieve.hpp"

#include <json.hpp>

#include <charconv>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

namespace zetaforge {

namespace {

using ordered_json = nlohmann::ordered_json;

// No critical-line zero lies below this ordinate; cached indices start here.
constexpr double kFirstZeroFloor = 14.0;

std::string escape_csv(const std::string& text) {
    if (text.find_first_of(",\"\n") == std::string::npos) {
        return text;
    }
    std::string out = "\"";
    for (const char c : text) {
        if (c == '"') {
            out += '"';
        }
        out += c;
    }
    return out + "\"";
}

std::string cell_text(const Cell& cell) {
    struct Visitor {
        std::string operator()(std::monostate) const { return ""; }
        std::string operator()(std::int64_t v) const { return std::to_string(v); }
        std::string operator()(std::uint64_t v) const { return std::to_string(v); }
        std::string operator()(double v) const { return format_double(v); }
        std::string operator()(const std::string& v) const { return v; }
    };
    return std::visit(Visitor{}, cell);
}

ordered_json cell_json(const Cell& cell) {
    struct Visitor {
        ordered_json operator()(std::monostate) const { return nullptr; }
        ordered_json operator()(std::int64_t v) const { return v; }
        ordered_json operator()(std::uint64_t v) const { return v; }
        ordered_json operator()(double v) const {
            if (!std::isfinite(v)) {
                return format_double(v);
            }
            return v;
        }
        ordered_json operator()(const std::string& v) const { return v; }
    };
    return std::visit(Visitor{}, cell);
}

Cell opt(const std::optional<double>& v) {
    if (v) {
        return *v;
    }
    return std::monostate{};
}

Cell u64(std::uint64_t v) {
    return v;
}

std::vector<double> im_points(const RunConfig& c) {
    std::vector<double> out;
    if (!c.im_end) {
        out.push_back(c.im);
        return out;
    }
    const auto steps = static_cast<std::size_t>(std::floor((*c.im_end - c.im) / c.im_step + 1e-9));
    for (std::size_t i = 0; i <= steps; ++i) {
        out.push_back(c.im + static_cast<double>(i) * c.im_step);
    }
    return out;
}

Table sieve_table(const RunConfig& c) {
    if (c.gap_center) {
        const GapLawReport r = gap_law_report(*c.gap_center, c.gap_window, c.jobs);
        return Table{{"center", "window", "mean_gap", "predicted_gap", "eq55_statistic", "sample_size", "max_gap"},
                     {{r.center, r.window, r.mean_gap, r.predicted_gap, r.eq55_statistic, u64(r.sample_size),
                       u64(r.max_gap)}}};
    }
    const PrimeTable table = sieve_primes(c.limit, c.jobs);
    const double approx = pi_approx(c.limit);
    return Table{{"limit", "prime_count", "pi_approx", "count_over_approx"},
                 {{u64(c.limit), u64(table.count()), approx, static_cast<double>(table.count()) / approx}}};
}

Table ratios_table(const RunConfig& c) {
    Table t{{"n", "prime", "ratio_num", "ratio_den", "ratio_float", "empirical_ratio", "abs_err"}, {}};
    const auto classes = empirical_sift(c.empirical_limit);
    const auto n_total = static_cast<double>(c.empirical_limit);
    for (const auto& term : removal_ratios(c.count)) {
        const double ratio = term.value.convert_to<double>();
        Cell empirical = std::monostate{};
        Cell abs_err = std::monostate{};
        if (term.n <= classes.size()) {
            const double density = static_cast<double>(classes[term.n - 1].members_count) / n_total;
            empirical = density;
            abs_err = std::abs(density - ratio);
        }
        t.rows.push_back({u64(term.n), u64(term.prime), numerator(term.value).str(),
                          denominator(term.value).str(), ratio, empirical, abs_err});
    }
    return t;
}

Table eta_table(const RunConfig& c) {
    Table t{{"s_re", "s_im", "base_m", "terms", "value_re", "value_im", "err_est"}, {}};
    EtaSpec spec{c.base, c.terms, c.terms == 0 ? Acceleration::alternating : Acceleration::none};
    for (const double im : im_points(c)) {
        const Complex s{c.re, im};
        const EvalResult r = evaluate_eta(spec, s, c.tol, c.jobs);
        t.rows.push_back({c.re, im, u64(c.base), u64(r.terms_used), r.value.real(), r.value.imag(), r.err_estimate});
    }
    return t;
}

Table zeta_table(const RunConfig& c) {
    Table t{{"s_re", "s_im", "method", "terms", "value_re", "value_im", "err_est"}, {}};
    for (const double im : im_points(c)) {
        const Complex s{c.re, im};
        if (c.method == "eta") {
            const EvalResult r = zeta_from_eta(s, c.tol);
            t.rows.push_back({c.re, im, c.method, u64(r.terms_used), r.value.real(), r.value.imag(), r.err_estimate});
        } else {
            const Complex v =
                c.method == "corrected" ? zeta_partial_corrected(s, c.terms, c.jobs) : euler_product_partial(s, c.terms);
            t.rows.push_back({c.re, im, c.method, u64(c.terms), v.real(), v.imag(), std::monostate{}});
        }
    }
    return t;
}

Table lambda_table(const RunConfig& c) {
    Table t{{"s_re", "s_im", "N", "lambda_re", "lambda_im", "asym_re", "asym_im", "rel_err"}, {}};
    for (const double im : im_points(c)) {
        const Complex s{c.re, im};
        for (const std::uint64_t n : c.lambda_n) {
            const Complex lam = lambda_partial(s, n, c.jobs);
            const Complex asym = lambda_asymptote(s, n);
            t.rows.push_back({c.re, im, u64(n), lam.real(), lam.imag(), asym.real(), asym.imag(),
                              std::abs(lam - asym) / std::abs(asym)});
        }
    }
    return t;
}

// A cache is reused when its zeros up to t_max agree with the counting
// formula; otherwise the range is scanned and new indices are appended.
std::vector<ZeroRecord> obtain_zeros(const RunConfig& c) {
    if (c.cache_path && c.scan.t_min < kFirstZeroFloor) {
        auto cached = load_zero_cache(*c.cache_path);
        std::erase_if(cached, [&](const ZeroRecord& r) { return r.gamma > c.scan.t_max; });
        if (!cached.empty() &&
            std::abs(static_cast<double>(cached.size()) - zero_count_estimate(c.scan.t_max)) < 1.0) {
            return cached;
        }
    }
    auto zeros = scan_zeros(c.scan, c.jobs);
    if (c.cache_path) {
        if (c.scan.t_min >= kFirstZeroFloor) {
            throw UsageError("zero cache indices count from the first zero; scan must start below 14");
        }
        append_zero_cache(*c.cache_path, zeros, c.scan.tol);
    }
    return zeros;
}

Table zeros_table(const RunConfig& c) {
    Table t{{"k", "gamma", "residual"}, {}};
    for (const auto& r : obtain_zeros(c)) {
        t.rows.push_back({static_cast<std::int64_t>(r.k), r.gamma, r.residual});
    }
    return t;
}

Table predict_table(const RunConfig& c) {
    Table t{{"n", "k", "predicted_y"}, {}};
    for (std::uint64_t n = c.n_min; n <= c.n_max; ++n) {
        t.rows.push_back({u64(n), static_cast<std::int64_t>(c.k), predicted_y_asymptotic(n, c.k)});
    }
    return t;
}

Table compare_table(const RunConfig& c) {
    Table t{{"n", "k", "predicted_y", "gamma_by_index", "rel_dev_index", "gamma_nearest", "rel_dev_nearest"}, {}};
    const auto zeros = obtain_zeros(c);
    for (const auto& row : compare_to_actual(c.n_min, c.n_max, c.k, zeros)) {
        t.rows.push_back({u64(row.n), static_cast<std::int64_t>(row.k_mode), row.predicted_y,
                          opt(row.gamma_by_index), opt(row.rel_dev_index), opt(row.gamma_nearest),
                          opt(row.rel_dev_nearest)});
    }
    return t;
}

Table ledger_table(const std::vector<ClaimCheck>& checks) {
    Table t{{"check_id", "paper_ref", "status", "measured", "tolerance"}, {}};
    for (const auto& check : checks) {
        t.rows.push_back({check.check_id, check.paper_ref, std::string(check.passed ? "pass" : "fail"),
                          check.measured, check.tolerance});
    }
    return t;
}

void emit(std::ostream& out, const RunConfig& config, const Table& table) {
    if (config.format == Format::json) {
        write_json(out, config, table);
    } else {
        write_csv(out, config, table);
    }
}

} // namespace

std::string to_string(Subcommand subcommand) {
    switch (subcommand) {
    case Subcommand::sieve: return "sieve";
    case Subcommand::ratios: return "ratios";
    case Subcommand::eta: return "eta";
    case Subcommand::zeta: return "zeta";
    case Subcommand::lambda: return "lambda";
    case Subcommand::zeros: return "zeros";
    case Subcommand::predict: return "predict";
    case Subcommand::compare: return "compare";
    case Subcommand::validate: return "validate";
    }
    return "unknown";
}

Subcommand parse_subcommand(const std::string& name) {
    for (const auto sub : {Subcommand::sieve, Subcommand::ratios, Subcommand::eta, Subcommand::zeta,
                           Subcommand::lambda, Subcommand::zeros, Subcommand::predict, Subcommand::compare,
                           Subcommand::validate}) {
        if (to_string(sub) == name) {
            return sub;
        }
    }
    throw UsageError("unknown subcommand '" + name + "'");
}

void RunConfig::validate() const {
    if (jobs < 1) {
        throw UsageError("--jobs must be >= 1");
    }
    switch (subcommand) {
    case Subcommand::sieve:
        if (limit < 2 || limit > kMaxSieveLimit) {
            throw UsageError("--limit must lie in [2, 1e8]");
        }
        break;
    case Subcommand::ratios:
        if (count < 1 || count > kMaxRatioIndex) {
            throw UsageError("--count must lie in [1, 10000]");
        }
        if (empirical_limit < 1 || empirical_limit > kMaxSiftLimit) {
            throw UsageError("--limit must lie in [1, 1e7]");
        }
        break;
    case Subcommand::eta:
    case Subcommand::zeta:
    case Subcommand::lambda:
        if (im_end && (!(im_step > 0.0) || *im_end < im)) {
            throw UsageError("--im-end must be >= --im and --im-step > 0");
        }
        if (subcommand == Subcommand::zeta && method != "eta" && method != "corrected" && method != "euler") {
            throw UsageError("--method must be eta, corrected or euler");
        }
        if (subcommand == Subcommand::zeta && method != "eta" && terms == 0) {
            throw UsageError("--terms is required for the corrected and euler methods");
        }
        if (subcommand == Subcommand::lambda && lambda_n.empty()) {
            throw UsageError("--n needs at least one value");
        }
        break;
    case Subcommand::zeros:
    case Subcommand::compare:
        try {
            scan.validate();
        } catch (const DomainError& e) {
            throw UsageError(e.what());
        }
        [[fallthrough]];
    case Subcommand::predict:
        if (subcommand != Subcommand::zeros && (n_min < 2 || n_max < n_min || k < 1)) {
            throw UsageError("requires 2 <= --n-min <= --n-max and --k >= 1");
        }
        break;
    case Subcommand::validate:
        if (level != "desk") {
            throw UsageError("--level must be desk");
        }
        break;
    }
}

std::string format_double(double value) {
    if (std::isnan(value)) {
        return "nan";
    }
    if (std::isinf(value)) {
        return value > 0 ? "inf" : "-inf";
    }
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(buf, res.ptr);
}

std::string resolved_config_json(const RunConfig& c) {
    ordered_json j;
    j["subcommand"] = to_string(c.subcommand);
    j["format"] = c.format == Format::csv ? "csv" : "json";
    switch (c.subcommand) {
    case Subcommand::sieve:
        j["limit"] = c.limit;
        if (c.gap_center) {
            j["gap_center"] = *c.gap_center;
            j["gap_window"] = c.gap_window;
        }
        break;
    case Subcommand::ratios:
        j["count"] = c.count;
        j["limit"] = c.empirical_limit;
        break;
    case Subcommand::eta:
    case Subcommand::zeta:
    case Subcommand::lambda:
        j["re"] = c.re;
        j["im"] = c.im;
        if (c.im_end) {
            j["im_end"] = *c.im_end;
            j["im_step"] = c.im_step;
        }
        if (c.subcommand == Subcommand::eta) {
            j["base"] = c.base;
        }
        if (c.subcommand == Subcommand::zeta) {
            j["method"] = c.method;
        }
        if (c.subcommand == Subcommand::lambda) {
            j["n"] = c.lambda_n;
        } else {
            j["terms"] = c.terms;
            j["tol"] = c.tol;
        }
        break;
    case Subcommand::zeros:
    case Subcommand::compare:
        j["tmin"] = c.scan.t_min;
        j["tmax"] = c.scan.t_max;
        j["step"] = c.scan.step;
        j["tol"] = c.scan.tol;
        j["refine_iters"] = c.scan.refine_iters;
        if (c.subcommand == Subcommand::zeros) {
            break;
        }
        [[fallthrough]];
    case Subcommand::predict:
        j["n_min"] = c.n_min;
        j["n_max"] = c.n_max;
        j["k"] = c.k;
        break;
    case Subcommand::validate:
        j["level"] = c.level;
        break;
    }
    return j.dump();
}

void write_csv(std::ostream& out, const RunConfig& config, const Table& table) {
    out << "# zetaforge " << kVersion << '\n';
    out << "# config: " << resolved_config_json(config) << '\n';
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
        out << (i ? "," : "") << table.columns[i];
    }
    out << '\n';
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            out << (i ? "," : "") << escape_csv(cell_text(row[i]));
        }
        out << '\n';
    }
}

void write_json(std::ostream& out, const RunConfig& config, const Table& table) {
    ordered_json doc;
    doc["tool"] = "zetaforge";
    doc["version"] = kVersion;
    doc["config"] = ordered_json::parse(resolved_config_json(config));
    doc["columns"] = table.columns;
    ordered_json rows = ordered_json::array();
    for (const auto& row : table.rows) {
        ordered_json obj = ordered_json::object();
        for (std::size_t i = 0; i < row.size(); ++i) {
            obj[table.columns[i]] = cell_json(row[i]);
        }
        rows.push_back(std::move(obj));
    }
    doc["rows"] = std::move(rows);
    out << doc.dump(2) << '\n';
}

Table build_table(const RunConfig& config) {
    config.validate();
    switch (config.subcommand) {
    case Subcommand::sieve: return sieve_table(config);
    case Subcommand::ratios: return ratios_table(config);
    case Subcommand::eta: return eta_table(config);
    case Subcommand::zeta: return zeta_table(config);
    case Subcommand::lambda: return lambda_table(config);
    case Subcommand::zeros: return zeros_table(config);
    case Subcommand::predict: return predict_table(config);
    case Subcommand::compare: return compare_table(config);
    case Subcommand::validate: return ledger_table(run_claims_ledger(config));
    }
    throw UsageError("unhandled subcommand");
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    int status = kExitOk;
    Table table;
    try {
        table = build_table(config);
        if (config.subcommand == Subcommand::validate) {
            for (const auto& row : table.rows) {
                if (std::get<std::string>(row[2]) != "pass") {
                    status = kExitValidation;
                }
            }
        }
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const NumericalError& e) {
        err << "numerical failure in " << e.what() << '\n';
        return kExitNumerical;
    }

    if (config.out_path) {
        std::ofstream file(*config.out_path, std::ios::binary | std::ios::trunc);
        if (!file) {
            err << "usage error: cannot write " << config.out_path->string() << '\n';
            return kExitUsage;
        }
        emit(file, config, table);
    } else {
        emit(out, config, table);
    }
    if (status == kExitValidation) {
        err << "validation failure: at least one claims-ledger check is outside tolerance\n";
    }
    return status;
}

} // namespace zetaforge
