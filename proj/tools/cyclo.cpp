// Command-line surface for the binary-cyclotomic sparsity library.
//
// Subcommands: theta, poly, sieve, aset, bset, maps, report.
// Exit codes: 0 success, 2 domain error, 3 resource error.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "cyclo/census.hpp"
#include "cyclo/core.hpp"
#include "cyclo/epsilon.hpp"
#include "cyclo/error.hpp"
#include "cyclo/io.hpp"
#include "cyclo/maps.hpp"
#include "cyclo/sieve.hpp"

namespace {

struct cli_config {
    std::uint64_t limit = 0;
    std::string eps_text;
    std::string format;
    std::string out_path;
    int workers = 0;
    std::string sieve_cache;
    bool override_eps_range = false;
    std::size_t max_list = 100;

    std::uint64_t p = 0, q = 0, m = 0;
    std::string check = "both";
};

void write_output(const cli_config& cfg, const std::string& text) {
    if (cfg.out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream os(cfg.out_path, std::ios::binary | std::ios::trunc);
    if (!os) throw cyclo::error(cyclo::errc::bad_format, "cannot open output: " + cfg.out_path);
    os << text;
    if (!os) throw cyclo::error(cyclo::errc::bad_format, "write failed: " + cfg.out_path);
}

// Loads the cache when valid and large enough, otherwise sieves (and
// refreshes the cache if a path was given).  Wrong magic or version is a
// hard error, never silently rebuilt.
cyclo::factor_table acquire_table(const cli_config& cfg, std::uint64_t needed) {
    if (!cfg.sieve_cache.empty() && std::filesystem::exists(cfg.sieve_cache)) {
        cyclo::factor_table t = cyclo::factor_table::load(cfg.sieve_cache);
        if (t.limit() >= needed) return t;
    }
    cyclo::factor_table t = cyclo::factor_table::build(needed);
    if (!cfg.sieve_cache.empty()) t.save(cfg.sieve_cache);
    return t;
}

void require_format(const cli_config& cfg, std::initializer_list<const char*> allowed) {
    if (cfg.format.empty()) return;
    for (const char* a : allowed)
        if (cfg.format == a) return;
    throw cyclo::error(cyclo::errc::bad_format,
                       "unsupported --format \"" + cfg.format + "\" for this subcommand");
}

// Splits an odd m into two distinct odd primes, or reports it non-binary.
cyclo::binary_modulus modulus_from_m(std::uint64_t m) {
    if (m < 15 || m % 2 == 0)
        throw cyclo::error(cyclo::errc::not_binary, "not a binary number: " + std::to_string(m));
    std::uint64_t f = 0;
    for (std::uint64_t d = 3; d * d <= m; d += 2) {
        if (m % d == 0) {
            f = d;
            break;
        }
    }
    if (f == 0 || f == m)
        throw cyclo::error(cyclo::errc::not_binary, "not a binary number: " + std::to_string(m));
    const std::uint64_t rest = m / f;
    if (rest == f || !cyclo::is_prime_u64(rest))
        throw cyclo::error(cyclo::errc::not_binary, "not a binary number: " + std::to_string(m));
    return cyclo::make_binary_modulus(f, rest);
}

cyclo::epsilon parse_eps(const cli_config& cfg) {
    if (cfg.eps_text.empty())
        throw cyclo::error(cyclo::errc::bad_format, "--eps u/v is required");
    return cyclo::epsilon::parse(cfg.eps_text);
}

int run_theta(const cli_config& cfg) {
    require_format(cfg, {"plain"});
    cyclo::binary_modulus bm;
    if (cfg.m != 0) {
        bm = modulus_from_m(cfg.m);
    } else if (cfg.p != 0 && cfg.q != 0) {
        bm = cyclo::make_binary_modulus(cfg.p, cfg.q);
    } else {
        throw cyclo::error(cyclo::errc::bad_format, "theta: give --p and --q, or --m");
    }
    write_output(cfg, cyclo::io::theta_line(bm) + "\n");
    return 0;
}

int run_poly(const cli_config& cfg) {
    require_format(cfg, {"csv"});
    if (cfg.p == 0 || cfg.q == 0)
        throw cyclo::error(cyclo::errc::bad_format, "poly: --p and --q are required");
    const auto poly = cyclo::build_phi_pq(cfg.p, cfg.q);
    write_output(cfg, cyclo::io::poly_csv(poly));
    return 0;
}

int run_sieve(const cli_config& cfg) {
    require_format(cfg, {"plain"});
    if (cfg.limit < 2) throw cyclo::error(cyclo::errc::limit_too_small, "sieve: --limit >= 2");
    if (cfg.sieve_cache.empty())
        throw cyclo::error(cyclo::errc::bad_format, "sieve: --sieve-cache path is required");
    const auto table = cyclo::factor_table::build(cfg.limit);
    table.save(cfg.sieve_cache);
    write_output(cfg, "limit " + std::to_string(table.limit()) + " primes " +
                          std::to_string(table.prime_pi(table.limit())) + "\n");
    return 0;
}

int run_aset(const cli_config& cfg) {
    require_format(cfg, {"csv"});
    const auto eps = parse_eps(cfg);
    if (cfg.limit < 2) throw cyclo::error(cyclo::errc::limit_too_small, "aset: --limit >= 2");
    const auto table = acquire_table(cfg, cfg.limit);
    const auto rows = cyclo::enumerate_a(table, cfg.limit, eps, cfg.workers);
    write_output(cfg, cyclo::io::aset_csv(table, rows));
    return 0;
}

int run_bset(const cli_config& cfg) {
    require_format(cfg, {"csv"});
    const auto eps = parse_eps(cfg);
    if (cfg.limit < 2) throw cyclo::error(cyclo::errc::limit_too_small, "bset: --limit >= 2");
    const auto table = acquire_table(cfg, cfg.limit);
    const auto rows = cyclo::enumerate_b(table, cfg.limit, eps, cfg.workers);
    write_output(cfg, cyclo::io::bset_csv(rows));
    return 0;
}

int run_report(const cli_config& cfg) {
    require_format(cfg, {"json"});
    if (cfg.limit < 16) throw cyclo::error(cyclo::errc::limit_too_small, "report: --limit >= 16");
    const auto table = acquire_table(cfg, cfg.limit);
    if (!cfg.eps_text.empty()) {
        const auto report =
            cyclo::build_report(table, cfg.limit, cyclo::epsilon::parse(cfg.eps_text), cfg.workers);
        write_output(cfg, cyclo::io::report_json(report));
        return 0;
    }
    // Default epsilon grid: spans both the eps < 1/6 regime of the g-map
    // and the wider eps < 1/2 range.
    std::vector<cyclo::census_report> grid;
    for (const auto& eps : {cyclo::epsilon(1, 10), cyclo::epsilon(1, 8), cyclo::epsilon(47, 300),
                            cyclo::epsilon(1, 4), cyclo::epsilon(2, 5)})
        grid.push_back(cyclo::build_report(table, cfg.limit, eps, cfg.workers));
    write_output(cfg, cyclo::io::report_grid_json(grid));
    return 0;
}

int run_maps(const cli_config& cfg) {
    require_format(cfg, {"json"});
    const auto eps = parse_eps(cfg);
    if (cfg.limit < 2) throw cyclo::error(cyclo::errc::limit_too_small, "maps: --limit >= 2");
    if (cfg.check != "f" && cfg.check != "g" && cfg.check != "both")
        throw cyclo::error(cyclo::errc::bad_format, "maps: --check must be f, g, or both");
    const auto table = acquire_table(cfg, cfg.limit);

    cyclo::map_report report;
    report.eps = eps;
    report.limit = cfg.limit;
    if (cfg.check == "f" || cfg.check == "both")
        report = cyclo::scan_f(table, cfg.limit, eps, cfg.workers);
    if (cfg.check == "g" || cfg.check == "both") {
        const auto g = cyclo::scan_g(table, cfg.limit, eps, cfg.workers, cfg.override_eps_range);
        report.roundtrip_failures = g.roundtrip_failures;
        report.max_g_failure_m2 = g.max_g_failure_m2;
        report.aset_failures_g = g.aset_failures_g;
        report.max_aset_failure_g = g.max_aset_failure_g;
        report.scanned_b_size = g.scanned_b_size;
        report.product_bound_failures = g.product_bound_failures;
        report.prime_lower_bound_failures = g.prime_lower_bound_failures;
        report.g_injective = g.g_injective;
        report.empirical_C = g.empirical_C;
    }
    write_output(cfg, cyclo::io::map_report_json(report, cfg.max_list));
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"binary cyclotomic polynomials: sparsity census and proof-map scans"};
    app.require_subcommand(1);

    cli_config cfg;

    const auto add_common = [&](CLI::App* sub, bool with_eps) {
        sub->add_option("--limit", cfg.limit, "upper bound N (sets are strict: n < N, m < N)");
        if (with_eps) sub->add_option("--eps", cfg.eps_text, "exact rational epsilon, e.g. 1/10");
        sub->add_option("--format", cfg.format, "output format override");
        sub->add_option("--out", cfg.out_path, "output file (default stdout)");
        sub->add_option("--workers", cfg.workers, "worker threads (default: all cores)")
            ->check(CLI::PositiveNumber);
        sub->add_option("--sieve-cache", cfg.sieve_cache, "SPFT sieve cache file");
    };

    auto* theta = app.add_subcommand("theta", "m p q p' q' theta for one binary modulus");
    theta->add_option("--p", cfg.p, "odd prime p");
    theta->add_option("--q", cfg.q, "odd prime q");
    theta->add_option("--m", cfg.m, "odd semiprime m = p*q");
    add_common(theta, false);

    auto* poly = app.add_subcommand("poly", "Phi_pq term list as exponent,coefficient CSV");
    poly->add_option("--p", cfg.p, "odd prime p");
    poly->add_option("--q", cfg.q, "odd prime q");
    add_common(poly, false);

    auto* sieve = app.add_subcommand("sieve", "build a factor table and write the SPFT cache");
    add_common(sieve, false);

    auto* aset = app.add_subcommand("aset", "list A_eps(limit) as CSV");
    add_common(aset, true);

    auto* bset = app.add_subcommand("bset", "list B_eps(limit) as CSV");
    add_common(bset, true);

    auto* maps = app.add_subcommand("maps", "scan the f and g maps between A and B");
    add_common(maps, true);
    maps->add_option("--check", cfg.check, "which scan to run: f, g, or both");
    maps->add_flag("--override-eps-range", cfg.override_eps_range,
                   "allow eps >= 1/6 in the g-scan");
    maps->add_option("--max-list", cfg.max_list, "cap violation lists in JSON output");

    auto* report = app.add_subcommand("report", "census report as JSON");
    add_common(report, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (theta->parsed()) return run_theta(cfg);
        if (poly->parsed()) return run_poly(cfg);
        if (sieve->parsed()) return run_sieve(cfg);
        if (aset->parsed()) return run_aset(cfg);
        if (bset->parsed()) return run_bset(cfg);
        if (maps->parsed()) return run_maps(cfg);
        if (report->parsed()) return run_report(cfg);
    } catch (const cyclo::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.is_resource() ? 3 : 2;
    } catch (const std::bad_alloc&) {
        std::cerr << "error: out of memory\n";
        return 3;
    }
    return 0;
}
