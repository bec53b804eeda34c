#include "cyclo/census.hpp"

#include <algorithm>
#include <cmath>

#include "cyclo/parallel.hpp"
#include "cyclo/power_cmp.hpp"

namespace cyclo {

namespace {

// Index of the first odd prime (primes[0] = 2 whenever limit >= 2).
constexpr std::size_t kFirstOdd = 1;

// Number of outer primes p with p odd and p * next_prime(p) possibly below
// the bound; p <= sqrt(bound) is a safe cutoff since p < q.
std::size_t outer_prime_count(const factor_table& table, std::uint64_t bound) {
    const auto& primes = table.primes();
    std::size_t n = kFirstOdd;
    while (n < primes.size()) {
        const std::uint64_t p = primes[n];
        if (p * p > bound) break;
        ++n;
    }
    return n;
}

constexpr std::uint64_t kPrimeChunk = 8;

} // namespace

std::vector<binary_modulus> enumerate_binary(const factor_table& table, std::uint64_t limit,
                                             binary_order order, int workers) {
    if (limit > table.limit() + 1)
        throw error(errc::out_of_range, "enumerate_binary: limit exceeds table limit");
    const auto& primes = table.primes();
    if (limit <= 15 || primes.size() <= kFirstOdd + 1) return {};

    const std::uint64_t bound = limit - 1;  // strict m < limit
    const std::size_t outer_end = outer_prime_count(table, bound);

    auto chunks = par::map_chunks<std::vector<binary_modulus>>(
        kFirstOdd, outer_end, kPrimeChunk, workers,
        [&](std::uint64_t ilo, std::uint64_t ihi) {
            std::vector<binary_modulus> part;
            for (std::uint64_t i = ilo; i < ihi; ++i) {
                const std::uint64_t p = primes[i];
                for (std::size_t j = i + 1; j < primes.size(); ++j) {
                    const std::uint64_t q = primes[j];
                    if (p * q > bound) break;
                    part.push_back(detail::make_from_primes(p, q));
                }
            }
            return part;
        });

    std::vector<binary_modulus> out;
    for (auto& c : chunks) out.insert(out.end(), c.begin(), c.end());
    if (order == binary_order::by_m)
        std::sort(out.begin(), out.end(),
                  [](const binary_modulus& a, const binary_modulus& b) { return a.m < b.m; });
    return out;
}

std::uint64_t count_binary_leq(const factor_table& table, std::uint64_t bound, int workers) {
    if (bound > table.limit())
        throw error(errc::out_of_range, "count_binary_leq: bound exceeds table limit");
    const auto& primes = table.primes();
    if (primes.size() <= kFirstOdd + 1) return 0;

    // For each odd p <= sqrt(bound), the partners are the primes q in
    // (p, bound/p]; their number is pi(bound/p) - pi(p).
    const std::size_t outer_end = outer_prime_count(table, bound);
    auto partial = par::map_chunks<std::uint64_t>(
        kFirstOdd, outer_end, kPrimeChunk, workers,
        [&](std::uint64_t ilo, std::uint64_t ihi) {
            std::uint64_t count = 0;
            for (std::uint64_t i = ilo; i < ihi; ++i) {
                const std::uint64_t p = primes[i];
                const std::uint64_t qmax = bound / p;
                if (qmax > p) count += table.prime_pi(qmax) - table.prime_pi(p);
            }
            return count;
        });

    std::uint64_t total = 0;
    for (std::uint64_t c : partial) total += c;
    return total;
}

bool in_b(const binary_modulus& bm, const epsilon& eps) {
    eps.require_below_half("in_b");
    // theta < m^{1/2+eps}  <=>  theta^{2v} < m^{v+2u}
    return compare_power(bm.theta, bm.m, eps.den + 2 * eps.num, 2 * eps.den) < 0;
}

std::vector<binary_modulus> enumerate_b(const factor_table& table, std::uint64_t limit,
                                        const epsilon& eps, int workers) {
    eps.require_below_half("enumerate_b");
    if (limit > table.limit() + 1)
        throw error(errc::out_of_range, "enumerate_b: limit exceeds table limit");
    const auto& primes = table.primes();
    if (limit <= 15 || primes.size() <= kFirstOdd + 1) return {};

    const std::uint64_t bound = limit - 1;
    const std::size_t outer_end = outer_prime_count(table, bound);
    const std::uint64_t exp_num = eps.den + 2 * eps.num;
    const std::uint64_t exp_den = 2 * eps.den;

    auto chunks = par::map_chunks<std::vector<binary_modulus>>(
        kFirstOdd, outer_end, kPrimeChunk, workers,
        [&](std::uint64_t ilo, std::uint64_t ihi) {
            std::vector<binary_modulus> part;
            for (std::uint64_t i = ilo; i < ihi; ++i) {
                const std::uint64_t p = primes[i];
                for (std::size_t j = i + 1; j < primes.size(); ++j) {
                    const std::uint64_t q = primes[j];
                    if (p * q > bound) break;
                    binary_modulus bm = detail::make_from_primes(p, q);
                    if (compare_power(bm.theta, bm.m, exp_num, exp_den) < 0)
                        part.push_back(bm);
                }
            }
            return part;
        });

    std::vector<binary_modulus> out;
    for (auto& c : chunks) out.insert(out.end(), c.begin(), c.end());
    std::sort(out.begin(), out.end(),
              [](const binary_modulus& a, const binary_modulus& b) { return a.m < b.m; });
    return out;
}

bool part3_prime_constraint(std::uint64_t p, std::uint64_t q, const epsilon& eps) {
    eps.require_below_half("part3_prime_constraint");
    if (q <= p)
        throw error(errc::out_of_range, "part3_prime_constraint: labels must satisfy q > p");
    // q < p^{(1/2+eps)/(1/2-eps)}  <=>  q^{v-2u} < p^{v+2u}
    return compare_power(q, p, eps.den + 2 * eps.num, eps.den - 2 * eps.num) < 0;
}

std::uint64_t part3_pair_bound(const factor_table& table, std::uint64_t limit,
                               const epsilon& eps, int workers) {
    eps.require_below_half("part3_pair_bound");
    if (limit > table.limit() + 1)
        throw error(errc::out_of_range, "part3_pair_bound: limit exceeds table limit");
    const auto& primes = table.primes();
    if (limit <= 15 || primes.size() <= kFirstOdd + 1) return 0;

    const std::uint64_t bound = limit - 1;
    const std::size_t outer_end = outer_prime_count(table, bound);
    const std::uint64_t exp_num = eps.den + 2 * eps.num;
    const std::uint64_t exp_den = eps.den - 2 * eps.num;

    // For each p the constraint q^{v-2u} < p^{v+2u} caps q at a single
    // integer endpoint, so the inner count collapses to a pi difference.
    auto partial = par::map_chunks<std::uint64_t>(
        kFirstOdd, outer_end, kPrimeChunk, workers,
        [&](std::uint64_t ilo, std::uint64_t ihi) {
            std::uint64_t count = 0;
            for (std::uint64_t i = ilo; i < ihi; ++i) {
                const std::uint64_t p = primes[i];
                std::uint64_t qmax = bound / p;
                const std::uint64_t qcap = floor_power_strict(p, exp_num, exp_den);
                if (qcap < qmax) qmax = qcap;
                if (qmax > p) count += table.prime_pi(qmax) - table.prime_pi(p);
            }
            return count;
        });

    std::uint64_t total = 0;
    for (std::uint64_t c : partial) total += c;
    return total;
}

std::pair<std::uint64_t, std::uint64_t> part3_literal_sums(const factor_table& table,
                                                         std::uint64_t limit,
                                                         const epsilon& eps) {
    eps.require_below_half("part3_literal_sums");
    if (limit > table.limit())
        throw error(errc::out_of_range, "part3_literal_sums: limit exceeds table limit");
    const auto& primes = table.primes();

    const std::uint64_t v = eps.den, u = eps.num;
    std::uint64_t sum1 = 0, sum2 = 0;
    const std::uint64_t sqrt_n = floor_power(limit, 1, 2);
    const std::uint64_t pi_sqrt_n = table.prime_pi(sqrt_n);

    for (std::size_t i = kFirstOdd; i < primes.size(); ++i) {
        const std::uint64_t p = primes[i];
        // p < limit^{1/2-eps}  <=>  p^{2v} < limit^{v-2u}
        const int cmp_lower = compare_power(p, limit, v - 2 * u, 2 * v);
        if (cmp_lower < 0) {
            // pi(p^{(1/2+eps)/(1/2-eps)}): exponent (v+2u)/(v-2u), floored.
            const std::uint64_t x = floor_power(p, v + 2 * u, v - 2 * u);
            const std::uint64_t cap = x < table.limit() ? x : table.limit();
            const std::uint64_t hi = table.prime_pi(cap);
            const std::uint64_t lo = table.prime_pi(p);
            if (hi > lo) sum1 += hi - lo;
        } else if (cmp_lower > 0 && p <= sqrt_n) {
            if (p * p == limit) continue;  // p = limit^{1/2} exactly: outside p < limit^{1/2}
            const std::uint64_t lo = table.prime_pi(p);
            if (pi_sqrt_n > lo) sum2 += pi_sqrt_n - lo;
        } else if (p > sqrt_n) {
            break;
        }
    }
    return {sum1, sum2};
}

double landau_ratio(const factor_table& table, std::uint64_t limit, int workers) {
    if (limit < 16)
        throw error(errc::limit_too_small, "landau_ratio: limit must be >= 16");
    const std::uint64_t count = count_binary_leq(table, limit, workers);
    const double n = static_cast<double>(limit);
    return static_cast<double>(count) * std::log(n) / (n * std::log(std::log(n)));
}

census_report build_report(const factor_table& table, std::uint64_t limit,
                           const epsilon& eps, int workers) {
    eps.require_below_half("build_report");
    if (limit > table.limit())
        throw error(errc::out_of_range, "build_report: limit exceeds table limit");
    if (limit < 16) throw error(errc::limit_too_small, "build_report: limit must be >= 16");

    census_report r;
    r.limit = limit;
    r.eps = eps;
    r.count_A_sqrt = enumerate_a(table, floor_power(limit, 1, 2), eps, workers).size();
    r.count_B = enumerate_b(table, limit, eps, workers).size();
    r.count_binary = count_binary_leq(table, limit - 1, workers);
    r.part3_pair_bound = part3_pair_bound(table, limit, eps, workers);
    const auto sums = part3_literal_sums(table, limit, eps);
    r.part3_sum1 = sums.first;
    r.part3_sum2 = sums.second;

    const double n = static_cast<double>(limit);
    r.ratio_B_sqrtN = static_cast<double>(r.count_B) / std::sqrt(n);
    r.ratio_B_partIII = static_cast<double>(r.count_B) * std::log(n) * std::log(n) / n;
    r.landau_ratio = landau_ratio(table, limit, workers);
    return r;
}

theta_sweep_stats theta_sweep(const factor_table& table, std::uint64_t bound, int workers) {
    if (bound > table.limit())
        throw error(errc::out_of_range, "theta_sweep: bound exceeds table limit");
    const auto& primes = table.primes();
    if (primes.size() <= kFirstOdd + 1) return {};

    const std::size_t outer_end = outer_prime_count(table, bound);
    auto partial = par::map_chunks<theta_sweep_stats>(
        kFirstOdd, outer_end, kPrimeChunk, workers,
        [&](std::uint64_t ilo, std::uint64_t ihi) {
            theta_sweep_stats s;
            for (std::uint64_t i = ilo; i < ihi; ++i) {
                const std::uint64_t p = primes[i];
                for (std::size_t j = i + 1; j < primes.size(); ++j) {
                    const std::uint64_t q = primes[j];
                    if (p * q > bound) break;
                    const binary_modulus bm = detail::make_from_primes(p, q);
                    ++s.checked;
                    if (!check_theta_bounds(bm)) ++s.bounds_failures;
                    if (!theta_exceeds_larger_prime(bm)) ++s.larger_prime_failures;
                    if (bm.pp() + bm.qq() != bm.m + 1) ++s.identity_failures;
                    if (bm.pp() == bm.qq()) ++s.distinct_failures;
                }
            }
            return s;
        });

    theta_sweep_stats total;
    for (const auto& s : partial) total += s;
    return total;
}

} // namespace cyclo
