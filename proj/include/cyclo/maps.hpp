#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cyclo/census.hpp"
#include "cyclo/core.hpp"
#include "cyclo/epsilon.hpp"
#include "cyclo/sieve.hpp"

namespace cyclo {

struct f_violation {
    std::uint64_t n = 0;
    std::uint64_t m = 0;      // P(n)*P(n+1), even when not binary
    std::uint64_t theta = 0;  // 0 when f(n) is not a binary modulus
};

struct f_collision {
    std::uint64_t n1 = 0;  // n1 < n2
    std::uint64_t n2 = 0;
    std::uint64_t m = 0;
};

struct g_failure {
    std::uint64_t n = 0;    // g(m)
    std::uint64_t m = 0;
    std::uint64_t g_m = 0;  // = n, the candidate preimage the check ran on
};

// Supremum witness for n+1 < C * m^{1/2+eps}: the (n, m) pair maximizing
// (n+1) / m^{1/2+eps}, compared exactly by cross-multiplied powers.
struct c_witness {
    std::uint64_t n_plus_1 = 0;
    std::uint64_t m = 0;
    double value = 0.0;  // diagnostic only
};

// Results of the f and g scans.  Scalar thresholds merge by max,
// lists by ordered concatenation, so reports are deterministic for every
// worker count.
struct map_report {
    epsilon eps;
    std::uint64_t limit = 0;

    // f-side: n in A_eps mapped forward
    std::vector<f_violation> violations_f_sparsity;  // f(n) not in B_eps
    std::uint64_t max_violator_m0 = 0;               // largest such m
    std::vector<f_collision> collisions_f;           // f(n1) = f(n2), n1 < n2
    std::uint64_t max_collision_m1 = 0;              // largest such m
    std::uint64_t domain_size = 0;                   // #A_eps(limit)
    std::uint64_t qprime_bound_failures = 0;         // proved inequalities; expect 0
    std::uint64_t theta_chain_failures = 0;
    std::uint64_t dichotomy_failures = 0;

    // g-side: m in B_eps mapped back
    std::vector<g_failure> roundtrip_failures;       // P(g(m))*P(g(m)+1) != m
    std::uint64_t max_g_failure_m2 = 0;              // largest such m
    std::vector<g_failure> aset_failures_g;          // retraction holds but g(m) not in A_eps
    std::uint64_t max_aset_failure_g = 0;
    std::uint64_t scanned_b_size = 0;                // #B_eps(limit)
    std::uint64_t product_bound_failures = 0;        // expect 0
    std::uint64_t prime_lower_bound_failures = 0;    // expect 0
    bool g_injective = true;                         // on the non-failing set
    c_witness empirical_C;
};

// f(n) = P(n)*P(n+1) as a binary modulus.  Empty when either largest prime
// factor is 2.  Equal factors cannot occur for n >= 2 (consecutive integers
// are coprime); that case is treated as a bug, not an error value.
std::optional<binary_modulus> try_map_f(const factor_table& table, std::uint64_t n);

// Throwing variant: not_binary when try_map_f is empty.
binary_modulus map_f(const factor_table& table, std::uint64_t n);

// q' <= (n+1)/q for q = P(n+1), q' the inverse of q mod p.
bool qprime_bound_check(const factor_table& table, std::uint64_t n);

// theta_m < 2*q*q' <= 2n+2.
bool theta_chain_check(const factor_table& table, std::uint64_t n);

// n+1 in {p*p', q*q'}.  Requires n < m; not automatic outside A_eps.
bool dichotomy_check(const factor_table& table, std::uint64_t n);

// g(m) = min(p*p', q*q') - 1.
std::uint64_t map_g(const binary_modulus& bm);

// map_g(map_f(n)) == n.
bool roundtrip(const factor_table& table, std::uint64_t n, const epsilon& eps);

// Scans f over every n in A_eps(limit).  Requires eps < 1/2 and
// limit <= table.limit.
map_report scan_f(const factor_table& table, std::uint64_t limit, const epsilon& eps,
                  int workers = 0);

// Scans g over every m in B_eps(limit).  Requires eps < 1/6 unless
// allow_large_eps is set (then any eps < 1/2 is scanned and failures are
// reported rather than asserted).
map_report scan_g(const factor_table& table, std::uint64_t limit, const epsilon& eps,
                  int workers = 0, bool allow_large_eps = false);

} // namespace cyclo
