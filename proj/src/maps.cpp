#include "cyclo/maps.hpp"

#include <algorithm>
#include <cmath>

#include "cyclo/parallel.hpp"
#include "cyclo/power_cmp.hpp"

namespace cyclo {

std::optional<binary_modulus> try_map_f(const factor_table& table, std::uint64_t n) {
    if (n < 2 || n + 1 > table.limit())
        throw error(errc::out_of_range, "map_f: needs 2 <= n and n+1 <= table limit");
    const std::uint64_t p = table.largest_prime_factor(n);
    const std::uint64_t q = table.largest_prime_factor(n + 1);
    if (p == 2 || q == 2) return std::nullopt;
    // Consecutive integers are coprime, so P(n) = P(n+1) cannot happen.
    if (p == q)
        throw error(errc::not_binary, "map_f: equal largest prime factors (bug)");
    binary_modulus bm = detail::make_from_primes(p, q);
    return bm;
}

binary_modulus map_f(const factor_table& table, std::uint64_t n) {
    auto bm = try_map_f(table, n);
    if (!bm)
        throw error(errc::not_binary,
                    "map_f: P(n) or P(n+1) is 2 at n=" + std::to_string(n));
    return *bm;
}

bool qprime_bound_check(const factor_table& table, std::uint64_t n) {
    const binary_modulus bm = map_f(table, n);
    // q = P(n+1) divides n+1, so a = (n+1)/q is an integer with p | aq - 1.
    return bm.q_inv <= (n + 1) / bm.q;
}

bool theta_chain_check(const factor_table& table, std::uint64_t n) {
    const binary_modulus bm = map_f(table, n);
    const std::uint64_t qq = bm.qq();
    return bm.theta < 2 * qq && 2 * qq <= 2 * n + 2;
}

bool dichotomy_check(const factor_table& table, std::uint64_t n) {
    const binary_modulus bm = map_f(table, n);
    return n + 1 == bm.pp() || n + 1 == bm.qq();
}

std::uint64_t map_g(const binary_modulus& bm) {
    return std::min(bm.pp(), bm.qq()) - 1;
}

bool roundtrip(const factor_table& table, std::uint64_t n, const epsilon& eps) {
    if (!in_a(table, n, eps))
        throw error(errc::out_of_range, "roundtrip: n not in A_eps");
    return map_g(map_f(table, n)) == n;
}

namespace {

struct f_chunk {
    std::vector<f_violation> violations;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> images;  // (m, n), binary f(n) only
    std::uint64_t domain = 0;
    std::uint64_t qprime_failures = 0;
    std::uint64_t chain_failures = 0;
    std::uint64_t dichotomy_failures = 0;
};

struct g_chunk {
    std::vector<g_failure> roundtrip_failures;
    std::vector<g_failure> aset_failures;
    std::vector<std::uint64_t> preimages;  // g(m) on the retraction-passing set
    std::uint64_t product_failures = 0;
    std::uint64_t lower_bound_failures = 0;
    bool has_witness = false;
    std::uint64_t best_n1 = 0;  // n+1 of the current C-witness
    std::uint64_t best_m = 0;
};

} // namespace

map_report scan_f(const factor_table& table, std::uint64_t limit, const epsilon& eps,
                  int workers) {
    eps.require_below_half("scan_f");
    if (limit > table.limit())
        throw error(errc::out_of_range, "scan_f: limit exceeds table limit");

    const std::uint64_t exp_num = eps.den + 2 * eps.num;  // in_b exponents for f(n)
    const std::uint64_t exp_den = 2 * eps.den;

    constexpr std::uint64_t kChunk = 1 << 14;
    auto chunks = par::map_chunks<f_chunk>(
        2, limit > 2 ? limit : 2, kChunk, workers, [&](std::uint64_t lo, std::uint64_t hi) {
            f_chunk out;
            for (std::uint64_t n = lo; n < hi; ++n) {
                if (!in_a(table, n, eps)) continue;
                ++out.domain;
                const std::uint64_t p = table.largest_prime_factor(n);
                const std::uint64_t q = table.largest_prime_factor(n + 1);
                if (p == 2 || q == 2) {
                    // f(n) is not a binary modulus, hence not in B_eps.
                    out.violations.push_back({n, p * q, 0});
                    continue;
                }
                const binary_modulus bm = detail::make_from_primes(p, q);
                const std::uint64_t qq = bm.qq();
                if (bm.q_inv > (n + 1) / q) ++out.qprime_failures;
                if (!(bm.theta < 2 * qq && 2 * qq <= 2 * n + 2)) ++out.chain_failures;
                if (n + 1 != bm.pp() && n + 1 != qq) ++out.dichotomy_failures;
                if (compare_power(bm.theta, bm.m, exp_num, exp_den) >= 0)
                    out.violations.push_back({n, bm.m, bm.theta});
                out.images.emplace_back(bm.m, n);
            }
            return out;
        });

    map_report report;
    report.eps = eps;
    report.limit = limit;

    std::vector<std::pair<std::uint64_t, std::uint64_t>> images;
    for (auto& c : chunks) {
        report.domain_size += c.domain;
        report.qprime_bound_failures += c.qprime_failures;
        report.theta_chain_failures += c.chain_failures;
        report.dichotomy_failures += c.dichotomy_failures;
        report.violations_f_sparsity.insert(report.violations_f_sparsity.end(),
                                            c.violations.begin(), c.violations.end());
        images.insert(images.end(), c.images.begin(), c.images.end());
    }
    for (const auto& v : report.violations_f_sparsity)
        report.max_violator_m0 = std::max(report.max_violator_m0, v.m);

    // Collisions: equal m among the collected (m, n) images.
    std::sort(images.begin(), images.end());
    for (std::size_t i = 0; i + 1 < images.size(); ++i) {
        for (std::size_t j = i + 1; j < images.size() && images[j].first == images[i].first;
             ++j) {
            report.collisions_f.push_back({images[i].second, images[j].second,
                                           images[i].first});
            report.max_collision_m1 = std::max(report.max_collision_m1, images[i].first);
        }
    }
    return report;
}

map_report scan_g(const factor_table& table, std::uint64_t limit, const epsilon& eps,
                  int workers, bool allow_large_eps) {
    if (!allow_large_eps) eps.require_below_sixth("scan_g");
    eps.require_below_half("scan_g");
    if (limit > table.limit())
        throw error(errc::out_of_range, "scan_g: limit exceeds table limit");

    const std::vector<binary_modulus> blist = enumerate_b(table, limit, eps, workers);
    const std::uint64_t v = eps.den, u = eps.num;

    // Exact witness order for (n+1)/m^{1/2+eps}: cross-multiplied powers.
    const auto witness_less = [&](std::uint64_t a_n1, std::uint64_t a_m, std::uint64_t b_n1,
                                  std::uint64_t b_m) {
        const int c = compare_prod_pow(a_n1, 2 * v, b_m, v + 2 * u,
                                       b_n1, 2 * v, a_m, v + 2 * u);
        if (c != 0) return c < 0;
        return a_m > b_m;  // ties resolved toward the smaller modulus
    };

    constexpr std::uint64_t kChunk = 256;
    auto chunks = par::map_chunks<g_chunk>(
        0, blist.size(), kChunk, workers, [&](std::uint64_t lo, std::uint64_t hi) {
            g_chunk out;
            for (std::uint64_t i = lo; i < hi; ++i) {
                const binary_modulus& bm = blist[i];
                const std::uint64_t pp = bm.pp(), qq = bm.qq();
                const std::uint64_t n = std::min(pp, qq) - 1;

                // (pp')(qq') < (m+1) m^{1/2+eps}, exactly.
                if (compare_prod_pow(pp * qq, 2 * v, 1, 0,
                                     bm.m + 1, 2 * v, bm.m, v + 2 * u) >= 0)
                    ++out.product_failures;
                // p, q > m^{1/2-eps}, exactly.
                if (compare_power(bm.p, bm.m, v - 2 * u, 2 * v) <= 0 ||
                    compare_power(bm.q, bm.m, v - 2 * u, 2 * v) <= 0)
                    ++out.lower_bound_failures;

                const bool retraction =
                    table.largest_prime_factor(n) * table.largest_prime_factor(n + 1) == bm.m;
                if (!retraction) {
                    out.roundtrip_failures.push_back({n, bm.m, n});
                } else {
                    out.preimages.push_back(n);
                    if (!in_a(table, n, eps)) out.aset_failures.push_back({n, bm.m, n});
                }

                if (!out.has_witness ||
                    witness_less(out.best_n1, out.best_m, n + 1, bm.m)) {
                    out.has_witness = true;
                    out.best_n1 = n + 1;
                    out.best_m = bm.m;
                }
            }
            return out;
        });

    map_report report;
    report.eps = eps;
    report.limit = limit;
    report.scanned_b_size = blist.size();

    std::vector<std::uint64_t> preimages;
    bool has_witness = false;
    std::uint64_t best_n1 = 0, best_m = 0;
    for (auto& c : chunks) {
        report.product_bound_failures += c.product_failures;
        report.prime_lower_bound_failures += c.lower_bound_failures;
        report.roundtrip_failures.insert(report.roundtrip_failures.end(),
                                         c.roundtrip_failures.begin(),
                                         c.roundtrip_failures.end());
        report.aset_failures_g.insert(report.aset_failures_g.end(), c.aset_failures.begin(),
                                      c.aset_failures.end());
        preimages.insert(preimages.end(), c.preimages.begin(), c.preimages.end());
        if (c.has_witness && (!has_witness || witness_less(best_n1, best_m, c.best_n1, c.best_m))) {
            has_witness = true;
            best_n1 = c.best_n1;
            best_m = c.best_m;
        }
    }
    for (const auto& f : report.roundtrip_failures)
        report.max_g_failure_m2 = std::max(report.max_g_failure_m2, f.m);
    for (const auto& f : report.aset_failures_g)
        report.max_aset_failure_g = std::max(report.max_aset_failure_g, f.m);

    std::sort(preimages.begin(), preimages.end());
    report.g_injective =
        std::adjacent_find(preimages.begin(), preimages.end()) == preimages.end();

    if (has_witness) {
        report.empirical_C.n_plus_1 = best_n1;
        report.empirical_C.m = best_m;
        const double alpha =
            (static_cast<double>(v) + 2.0 * static_cast<double>(u)) / (2.0 * static_cast<double>(v));
        report.empirical_C.value =
            static_cast<double>(best_n1) / std::pow(static_cast<double>(best_m), alpha);
    }
    return report;
}

} // namespace cyclo
