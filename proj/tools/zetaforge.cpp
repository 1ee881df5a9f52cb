// zetaforge: command-line front end for the zeta/eta/sieve laboratory.

#include "zetaforge/report.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <map>

namespace {

using zetaforge::Format;
using zetaforge::RunConfig;
using zetaforge::Subcommand;

void add_common(CLI::App* cmd, RunConfig& cfg) {
    static const std::map<std::string, Format> formats{{"csv", Format::csv}, {"json", Format::json}};
    cmd->add_option("--format", cfg.format, "csv or json")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    cmd->add_option("--out", cfg.out_path, "write the report here instead of stdout");
    cmd->add_option("--cache", cfg.cache_path, "zero cache file (default: $ZETAFORGE_CACHE)");
    cmd->add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::PositiveNumber);
}

void add_point(CLI::App* cmd, RunConfig& cfg) {
    cmd->add_option("--re", cfg.re, "Re s");
    cmd->add_option("--im", cfg.im, "Im s (first point of a sweep)");
    cmd->add_option("--im-end", cfg.im_end, "last Im s of a sweep");
    cmd->add_option("--im-step", cfg.im_step, "sweep spacing");
}

void add_scan(CLI::App* cmd, RunConfig& cfg) {
    cmd->add_option("--tmin", cfg.scan.t_min, "lower ordinate");
    cmd->add_option("--tmax", cfg.scan.t_max, "upper ordinate (<= 150)");
    cmd->add_option("--step", cfg.scan.step, "grid spacing (<= 0.05)");
    cmd->add_option("--tol", cfg.scan.tol, "residual tolerance");
    cmd->add_option("--refine-iters", cfg.scan.refine_iters, "bisection iteration cap");
}

} // namespace

int main(int argc, char** argv) {
    RunConfig cfg;
    CLI::App app{"zetaforge: prime sifting, eta/zeta numerics and zero predictions"};
    app.set_version_flag("--version", zetaforge::kVersion);
    app.require_subcommand(1);

    std::map<CLI::App*, Subcommand> dispatch;
    const auto sub = [&](const char* name, const char* help, Subcommand which) {
        CLI::App* cmd = app.add_subcommand(name, help);
        add_common(cmd, cfg);
        dispatch[cmd] = which;
        return cmd;
    };

    auto* sieve = sub("sieve", "prime count up to a limit, or a prime-gap report", Subcommand::sieve);
    sieve->add_option("--limit", cfg.limit, "sieve limit (<= 1e8)");
    sieve->add_option("--gap-center", cfg.gap_center, "centre of a gap-law window");
    sieve->add_option("--gap-window", cfg.gap_window, "half-width of the gap-law window");

    auto* ratios = sub("ratios", "exact removal ratios with empirical densities", Subcommand::ratios);
    ratios->add_option("--count", cfg.count, "number of ratios");
    ratios->add_option("--limit", cfg.empirical_limit, "N for empirical densities (<= 1e7)");

    auto* eta = sub("eta", "eta_m series: accelerated (base 2) or raw block sums", Subcommand::eta);
    add_point(eta, cfg);
    eta->add_option("--base", cfg.base, "base m");
    eta->add_option("--terms", cfg.terms, "raw terms; 0 selects acceleration");
    eta->add_option("--tol", cfg.tol, "accelerated tolerance");

    auto* zeta = sub("zeta", "zeta via eta, corrected partial sums or Euler product", Subcommand::zeta);
    add_point(zeta, cfg);
    zeta->add_option("--method", cfg.method, "eta | corrected | euler");
    zeta->add_option("--terms", cfg.terms, "terms (corrected) or primes (euler)");
    zeta->add_option("--tol", cfg.tol, "accelerated tolerance");

    auto* lambda = sub("lambda", "power sums against their N^{1-s}/(1-s) asymptote", Subcommand::lambda);
    add_point(lambda, cfg);
    lambda->add_option("--n", cfg.lambda_n, "evaluation points N")->delimiter(',');

    auto* zeros = sub("zeros", "critical-line zeros by Hardy-Z sign changes", Subcommand::zeros);
    add_scan(zeros, cfg);

    auto* predict = sub("predict", "predicted ordinates k pi n / ln n", Subcommand::predict);
    predict->add_option("--n-min", cfg.n_min);
    predict->add_option("--n-max", cfg.n_max);
    predict->add_option("--k", cfg.k);

    auto* compare = sub("compare", "predicted ordinates against located zeros", Subcommand::compare);
    add_scan(compare, cfg);
    compare->add_option("--n-min", cfg.n_min);
    compare->add_option("--n-max", cfg.n_max);
    compare->add_option("--k", cfg.k);

    auto* validate = sub("validate", "claims ledger: every checkable claim with its tolerance", Subcommand::validate);
    validate->add_option("--level", cfg.level, "desk");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return zetaforge::kExitUsage;
    }

    for (const auto& [cmd, which] : dispatch) {
        if (cmd->parsed()) {
            cfg.subcommand = which;
        }
    }
    if (!cfg.cache_path) {
        if (const char* env = std::getenv("ZETAFORGE_CACHE"); env != nullptr && *env != '\0') {
            cfg.cache_path = env;
        }
    }
    return zetaforge::run(cfg, std::cout, std::cerr);
}
