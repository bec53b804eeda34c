// Times the OpenMP census kernels against their serial reference
// implementations and cross-checks that both routes agree.
//
//   cyclo_bench [--limit N] [--eps u/v] [--workers W]

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <string>

#include <CLI11.hpp>

#include "cyclo/census.hpp"
#include "cyclo/parallel.hpp"
#include "cyclo/reference.hpp"
#include "cyclo/sieve.hpp"

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

template <typename SerialFn, typename ParallelFn>
void run_case(const char* name, SerialFn&& serial, ParallelFn&& parallel) {
    auto t0 = std::chrono::steady_clock::now();
    const auto ref_result = serial();
    const double ref_ms = ms_since(t0);

    t0 = std::chrono::steady_clock::now();
    const auto par_result = parallel();
    const double par_ms = ms_since(t0);

    const bool match = ref_result == par_result;
    std::printf("%-22s serial %9.2f ms   parallel %9.2f ms   speedup %5.2fx   %s\n", name,
                ref_ms, par_ms, par_ms > 0 ? ref_ms / par_ms : 0.0,
                match ? "results match" : "MISMATCH");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"serial-reference vs OpenMP kernel benchmark"};
    std::uint64_t limit = 1000000;
    std::string eps_text = "1/4";
    int workers = 0;
    app.add_option("--limit", limit, "census limit");
    app.add_option("--eps", eps_text, "epsilon as u/v");
    app.add_option("--workers", workers, "worker threads (default: all cores)");
    CLI11_PARSE(app, argc, argv);

    const auto eps = cyclo::epsilon::parse(eps_text);
    const int w = cyclo::par::resolve_workers(workers);
    std::printf("limit %llu, eps %s, %d worker(s)\n\n",
                static_cast<unsigned long long>(limit), eps.str().c_str(), w);

    auto t0 = std::chrono::steady_clock::now();
    const auto table = cyclo::factor_table::build(limit);
    std::printf("%-22s %9.2f ms\n", "sieve build", ms_since(t0));

    run_case(
        "count_binary",
        [&] { return cyclo::ref::count_binary_leq(table, limit - 1); },
        [&] { return cyclo::count_binary_leq(table, limit - 1, workers); });

    run_case(
        "enumerate_b",
        [&] {
            const auto v = cyclo::ref::enumerate_b(table, limit, eps);
            return std::pair(v.size(), v.empty() ? 0 : v.back().m);
        },
        [&] {
            const auto v = cyclo::enumerate_b(table, limit, eps, workers);
            return std::pair(v.size(), v.empty() ? 0 : v.back().m);
        });

    run_case(
        "part3_pair_bound",
        [&] { return cyclo::ref::part3_pair_bound(table, limit, eps); },
        [&] { return cyclo::part3_pair_bound(table, limit, eps, workers); });

    run_case(
        "theta_sweep",
        [&] { return cyclo::ref::theta_sweep(table, limit).checked; },
        [&] { return cyclo::theta_sweep(table, limit, workers).checked; });

    run_case(
        "enumerate_a",
        [&] { return cyclo::ref::enumerate_a(table, limit, eps).size(); },
        [&] { return cyclo::enumerate_a(table, limit, eps, workers).size(); });

    return 0;
}
