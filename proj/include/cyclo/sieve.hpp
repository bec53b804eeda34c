#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cyclo/epsilon.hpp"
#include "cyclo/error.hpp"

namespace cyclo {

// Smallest-prime-factor table for 2..limit (4 bytes per entry) plus the
// ascending prime list.  Immutable once built; concurrent reads are safe.
class factor_table {
public:
    // Sieves 2..limit.  limit must be >= 2 and < 2^32.
    static factor_table build(std::uint64_t limit);

    // SPFT cache: magic "SPFT", u32 version, u64 limit, u32 entries for n = 2..limit,
    // all little-endian.  Readers reject wrong magic, version, or size.
    static factor_table load(const std::string& path);
    void save(const std::string& path) const;

    std::uint64_t limit() const { return limit_; }

    // Least prime dividing n, 2 <= n <= limit.
    std::uint32_t spf(std::uint64_t n) const;

    bool is_prime(std::uint64_t n) const { return n >= 2 && spf(n) == n; }

    // Largest prime dividing n; P(1) = 1 by convention.
    std::uint64_t largest_prime_factor(std::uint64_t n) const;

    // Number of primes <= x, 0 <= x <= limit.
    std::uint64_t prime_pi(std::uint64_t x) const;

    const std::vector<std::uint32_t>& primes() const { return primes_; }

private:
    factor_table() = default;
    void rebuild_primes();

    std::uint64_t limit_ = 0;
    std::vector<std::uint32_t> spf_;     // index 2..limit_ valid
    std::vector<std::uint32_t> primes_;  // ascending
};

// P(n) > n^{1-eps} and P(n+1) > (n+1)^{1-eps}, both exact.
// Requires n >= 1, n+1 <= table.limit, 0 < eps < 1.  P(1) = 1 makes
// in_a(1, eps) well-defined and false.
bool in_a(const factor_table& table, std::uint64_t n, const epsilon& eps);

// All n with 1 <= n < limit and in_a(n, eps), ascending.  Deterministic
// for every worker count.
std::vector<std::uint64_t> enumerate_a(const factor_table& table, std::uint64_t limit,
                                       const epsilon& eps, int workers = 0);

} // namespace cyclo
