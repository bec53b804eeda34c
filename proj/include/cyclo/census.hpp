#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "cyclo/core.hpp"
#include "cyclo/epsilon.hpp"
#include "cyclo/sieve.hpp"

namespace cyclo {

enum class binary_order {
    by_m,        // ascending m
    grouped_by_p // ascending p, then ascending q within each p
};

// Counting quantities for one (limit, eps) pair.  The counts are exact;
// the three ratio fields are floating-point diagnostics derived from them.
struct census_report {
    std::uint64_t limit = 0;
    epsilon eps;
    std::uint64_t count_A_sqrt = 0;       // #A_eps(floor(sqrt(limit)))
    std::uint64_t count_B = 0;            // #B_eps(limit)
    std::uint64_t count_binary = 0;       // #{binary m < limit}
    double ratio_B_sqrtN = 0.0;           // count_B / sqrt(limit)
    double ratio_B_partIII = 0.0;         // count_B * ln(limit)^2 / limit
    double landau_ratio = 0.0;            // #{binary m <= limit} * ln(limit) / (limit * lnln(limit))
    std::uint64_t part3_pair_bound = 0;
    std::uint64_t part3_sum1 = 0;         // small-p half of the two-sum estimate
    std::uint64_t part3_sum2 = 0;         // large-p half
};

// All m = p*q < limit with 3 <= p < q odd primes, each exactly once.
std::vector<binary_modulus> enumerate_binary(const factor_table& table, std::uint64_t limit,
                                             binary_order order = binary_order::by_m,
                                             int workers = 0);

// #{binary m <= bound}.
std::uint64_t count_binary_leq(const factor_table& table, std::uint64_t bound, int workers = 0);

// theta_m < m^{1/2+eps}, decided exactly as theta^{2v} < m^{v+2u}.
// Requires 0 < eps < 1/2.
bool in_b(const binary_modulus& bm, const epsilon& eps);

// B_eps(limit), ascending by m.
std::vector<binary_modulus> enumerate_b(const factor_table& table, std::uint64_t limit,
                                        const epsilon& eps, int workers = 0);

// q < p^{(1/2+eps)/(1/2-eps)}, decided exactly as q^{v-2u} < p^{v+2u}.
// Labels must satisfy q > p; requires eps < 1/2.
bool part3_prime_constraint(std::uint64_t p, std::uint64_t q, const epsilon& eps);

// #{(p, q) : p < q odd primes, pq < limit, q^{v-2u} < p^{v+2u}}.
// Superset count of B_eps(limit) whenever theta_m > q throughout.
std::uint64_t part3_pair_bound(const factor_table& table, std::uint64_t limit,
                               const epsilon& eps, int workers = 0);

// The classical two-sum estimate for the pair count, taken with exact
// prime-counting values and exact power comparisons at every endpoint:
//   first  = sum over odd primes p < limit^{1/2-eps} of pi(p^{(1/2+eps)/(1/2-eps)}) - pi(p)
//   second = sum over odd primes limit^{1/2-eps} < p < limit^{1/2} of pi(limit^{1/2}) - pi(p)
std::pair<std::uint64_t, std::uint64_t> part3_literal_sums(const factor_table& table,
                                                         std::uint64_t limit,
                                                         const epsilon& eps);

// #{binary m <= limit} * ln(limit) / (limit * lnln(limit)); requires limit >= 16.
// The count is exact, only the ratio itself is floating point.
double landau_ratio(const factor_table& table, std::uint64_t limit, int workers = 0);

census_report build_report(const factor_table& table, std::uint64_t limit,
                           const epsilon& eps, int workers = 0);

// Exhaustive sweep of the elementary theta facts over all binary m <= bound:
// theta^2 > m, 2*theta < m, theta > max(p,q), p*p' + q*q' = m+1, p*p' != q*q'.
struct theta_sweep_stats {
    std::uint64_t checked = 0;
    std::uint64_t bounds_failures = 0;        // theta^2 > m or 2*theta < m failed
    std::uint64_t larger_prime_failures = 0;  // theta > max(p, q) failed
    std::uint64_t identity_failures = 0;      // p*p' + q*q' != m+1
    std::uint64_t distinct_failures = 0;      // p*p' == q*q'

    theta_sweep_stats& operator+=(const theta_sweep_stats& o) {
        checked += o.checked;
        bounds_failures += o.bounds_failures;
        larger_prime_failures += o.larger_prime_failures;
        identity_failures += o.identity_failures;
        distinct_failures += o.distinct_failures;
        return *this;
    }
};

theta_sweep_stats theta_sweep(const factor_table& table, std::uint64_t bound, int workers = 0);

} // namespace cyclo
