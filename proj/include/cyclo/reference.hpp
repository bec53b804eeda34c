#pragma once

#include <cstdint>
#include <vector>

#include "cyclo/census.hpp"
#include "cyclo/core.hpp"
#include "cyclo/epsilon.hpp"
#include "cyclo/sieve.hpp"

// Serial reference implementations of the hot census kernels.  These take
// the straightforward route (plain loops, per-pair big-integer predicates,
// no prime-counting shortcuts) and exist to pin down the parallel kernels
// in tests and in the benchmark.  Results must match the cyclo:: versions
// element for element.
namespace cyclo::ref {

std::vector<binary_modulus> enumerate_binary(const factor_table& table, std::uint64_t limit);

std::uint64_t count_binary_leq(const factor_table& table, std::uint64_t bound);

std::vector<binary_modulus> enumerate_b(const factor_table& table, std::uint64_t limit,
                                        const epsilon& eps);

// Pairwise comparator route, no integer-root shortcut.
std::uint64_t part3_pair_bound(const factor_table& table, std::uint64_t limit,
                               const epsilon& eps);

std::vector<std::uint64_t> enumerate_a(const factor_table& table, std::uint64_t limit,
                                       const epsilon& eps);

theta_sweep_stats theta_sweep(const factor_table& table, std::uint64_t bound);

} // namespace cyclo::ref
