#include "cyclo/reference.hpp"

#include <algorithm>

#include "cyclo/power_cmp.hpp"

namespace cyclo::ref {

std::vector<binary_modulus> enumerate_binary(const factor_table& table, std::uint64_t limit) {
    if (limit > table.limit() + 1)
        throw error(errc::out_of_range, "ref::enumerate_binary: limit exceeds table limit");
    std::vector<binary_modulus> out;
    const auto& primes = table.primes();
    for (std::size_t i = 1; i < primes.size(); ++i) {
        const std::uint64_t p = primes[i];
        if (limit == 0 || p * p >= limit) break;
        for (std::size_t j = i + 1; j < primes.size(); ++j) {
            const std::uint64_t q = primes[j];
            if (p * q >= limit) break;
            out.push_back(detail::make_from_primes(p, q));
        }
    }
    std::sort(out.begin(), out.end(),
              [](const binary_modulus& a, const binary_modulus& b) { return a.m < b.m; });
    return out;
}

std::uint64_t count_binary_leq(const factor_table& table, std::uint64_t bound) {
    if (bound == UINT64_MAX)
        throw error(errc::out_of_range, "ref::count_binary_leq: bound too large");
    return ref::enumerate_binary(table, bound + 1).size();
}

std::vector<binary_modulus> enumerate_b(const factor_table& table, std::uint64_t limit,
                                        const epsilon& eps) {
    eps.require_below_half("ref::enumerate_b");
    std::vector<binary_modulus> out;
    for (const auto& bm : ref::enumerate_binary(table, limit))
        if (in_b(bm, eps)) out.push_back(bm);
    return out;
}

std::uint64_t part3_pair_bound(const factor_table& table, std::uint64_t limit,
                               const epsilon& eps) {
    eps.require_below_half("ref::part3_pair_bound");
    if (limit > table.limit() + 1)
        throw error(errc::out_of_range, "ref::part3_pair_bound: limit exceeds table limit");
    std::uint64_t count = 0;
    const auto& primes = table.primes();
    for (std::size_t i = 1; i < primes.size(); ++i) {
        const std::uint64_t p = primes[i];
        if (limit == 0 || p * p >= limit) break;
        for (std::size_t j = i + 1; j < primes.size(); ++j) {
            const std::uint64_t q = primes[j];
            if (p * q >= limit) break;
            if (part3_prime_constraint(p, q, eps)) ++count;
        }
    }
    return count;
}

std::vector<std::uint64_t> enumerate_a(const factor_table& table, std::uint64_t limit,
                                       const epsilon& eps) {
    eps.require_below_one("ref::enumerate_a");
    if (limit > table.limit())
        throw error(errc::out_of_range, "ref::enumerate_a: limit exceeds table limit");
    std::vector<std::uint64_t> out;
    for (std::uint64_t n = 1; n < limit; ++n)
        if (in_a(table, n, eps)) out.push_back(n);
    return out;
}

theta_sweep_stats theta_sweep(const factor_table& table, std::uint64_t bound) {
    if (bound > table.limit())
        throw error(errc::out_of_range, "ref::theta_sweep: bound exceeds table limit");
    theta_sweep_stats s;
    const auto& primes = table.primes();
    for (std::size_t i = 1; i < primes.size(); ++i) {
        const std::uint64_t p = primes[i];
        if (p * p > bound) break;
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
}

} // namespace cyclo::ref
