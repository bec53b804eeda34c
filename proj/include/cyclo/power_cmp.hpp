#pragma once

#include <cstdint>

namespace cyclo {

// Exact three-way comparison of base^den against n^num.
// Decided in integer arithmetic only: a bit-length bound settles most
// calls, the rest fall through to GMP.  Returns -1, 0, +1.
int compare_power(std::uint64_t base, std::uint64_t n, std::uint64_t num, std::uint64_t den);

// base > n^{num/den}, decided exactly as base^den > n^num.
bool exceeds_power(std::uint64_t base, std::uint64_t n, std::uint64_t num, std::uint64_t den);

// Largest integer x with x^den <= n^num (floor of n^{num/den}); num >= 1, den >= 1.
std::uint64_t floor_power(std::uint64_t n, std::uint64_t num, std::uint64_t den);

// Largest integer x with x^den < n^num, i.e. the strict-inequality variant
// used for "q < p^alpha" style range endpoints.
std::uint64_t floor_power_strict(std::uint64_t n, std::uint64_t num, std::uint64_t den);

// Exact comparison of a1^e1 * b1^f1 against a2^e2 * b2^f2 (GMP).
int compare_prod_pow(std::uint64_t a1, std::uint64_t e1, std::uint64_t b1, std::uint64_t f1,
                     std::uint64_t a2, std::uint64_t e2, std::uint64_t b2, std::uint64_t f2);

} // namespace cyclo
