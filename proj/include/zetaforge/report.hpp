#pragma once

/// @file report.hpp
/// @brief Run configuration, deterministic CSV/JSON tables and the
/// subcommand dispatcher behind the zetaforge CLI.

#include "zetaforge/zero_finder.hpp"

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace zetaforge {

inline constexpr const char* kVersion = "0.1.0";

enum class Subcommand { sieve, ratios, eta, zeta, lambda, zeros, predict, compare, validate };
enum class Format { csv, json };

enum ExitStatus : int {
    kExitOk = 0,
    kExitUsage = 1,
    kExitNumerical = 2,
    kExitValidation = 3,
};

/// Invalid or inconsistent run configuration (exit status 1).
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    Subcommand subcommand = Subcommand::validate;
    Format format = Format::csv;
    std::optional<std::filesystem::path> out_path;
    std::optional<std::filesystem::path> cache_path;
    std::size_t jobs = 1;

    // sieve
    std::uint64_t limit = 1'000'000;
    std::optional<std::uint64_t> gap_center;
    std::uint64_t gap_window = 100'000;

    // ratios
    std::size_t count = 10;
    std::uint32_t empirical_limit = 1'000'000;

    // eta, zeta, lambda
    double re = 0.5;
    double im = 0.0;
    std::optional<double> im_end;
    double im_step = 1.0;
    unsigned base = 2;
    std::uint64_t terms = 0; ///< 0 selects the accelerated evaluator
    double tol = 1e-12;
    std::string method = "eta"; ///< zeta: eta | corrected | euler
    std::vector<std::uint64_t> lambda_n{1'000, 10'000, 100'000, 1'000'000};

    // zeros
    ScanConfig scan;

    // predict, compare
    std::uint64_t n_min = 2;
    std::uint64_t n_max = 29;
    int k = 2;

    // validate
    std::string level = "desk";

    /// Throws UsageError on inconsistent parameters.
    void validate() const;
};

std::string to_string(Subcommand subcommand);
Subcommand parse_subcommand(const std::string& name);

/// A table cell. monostate is an absent value (empty in CSV, null in JSON).
using Cell = std::variant<std::monostate, std::int64_t, std::uint64_t, double, std::string>;

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
};

/// Shortest round-trip decimal form of a double.
std::string format_double(double value);

/// Resolved configuration as compact JSON (only the subcommand's own
/// parameters; jobs and the output path never affect results and are
/// omitted so outputs compare byte-for-byte).
std::string resolved_config_json(const RunConfig& config);

/// CSV: "# " header lines with version and config, column row, data rows,
/// LF endings.
void write_csv(std::ostream& out, const RunConfig& config, const Table& table);

/// JSON object {"tool", "version", "config", "columns", "rows"}; each row
/// is an object keyed by column name.
void write_json(std::ostream& out, const RunConfig& config, const Table& table);

/// Computes the subcommand's table. Library errors propagate.
Table build_table(const RunConfig& config);

struct ClaimCheck {
    std::string check_id;
    std::string paper_ref;
    bool passed = false;
    double measured = 0.0;
    double tolerance = 0.0;
};

/// The desk-level claims ledger.
std::vector<ClaimCheck> run_claims_ledger(const RunConfig& config);

/// Runs a configuration end to end, writing the report to out_path or
/// `out`, diagnostics to `err`. Returns an ExitStatus.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

} // namespace zetaforge
