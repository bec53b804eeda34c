#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "cyclo/epsilon.hpp"
#include "cyclo/error.hpp"

namespace cyclo {

// m = p*q for distinct odd primes p, q, together with the two modular
// inverses and the nonzero-term count theta = 2*p_inv*q_inv - 1.
// Labels are kept exactly as the caller gave them; swapping p and q swaps
// the inverses but leaves m and theta unchanged.
struct binary_modulus {
    std::uint64_t p = 0;      // odd prime
    std::uint64_t q = 0;      // odd prime, q != p
    std::uint64_t m = 0;      // p*q
    std::uint64_t p_inv = 0;  // inverse of p mod q, in [1, q-1]
    std::uint64_t q_inv = 0;  // inverse of q mod p, in [1, p-1]
    std::uint64_t theta = 0;  // 2*p_inv*q_inv - 1

    std::uint64_t pp() const { return p * p_inv; }
    std::uint64_t qq() const { return q * q_inv; }
};

// Term list of a polynomial with small coefficients: exponents strictly
// increasing, zero coefficients never stored.
struct sparse_polynomial {
    std::vector<std::pair<std::uint64_t, int>> terms;

    std::uint64_t degree() const { return terms.empty() ? 0 : terms.back().first; }
    long long eval_at_one() const;
    bool is_palindromic() const;
};

// Inverse of a modulo `modulus`, in [1, modulus-1].
// Throws zero_residue if a == 0 (mod modulus), not_invertible if gcd != 1.
std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t modulus);

// Deterministic Miller-Rabin, valid for the full 64-bit range.
bool is_prime_u64(std::uint64_t n);

// Validating constructor: checks both arguments are distinct odd primes.
binary_modulus make_binary_modulus(std::uint64_t p, std::uint64_t q);

namespace detail {
// Trusted-path constructor for sieve-backed enumeration loops; the caller
// guarantees p, q are distinct odd primes.
binary_modulus make_from_primes(std::uint64_t p, std::uint64_t q);
} // namespace detail

// Phi_{pq} as a truncated power series: (1-x)(1-x^p)^{-1}(1-x^q)^{-1}
// up to degree (p-1)(q-1).  Every coefficient is asserted into {-1, 0, 1};
// anything else raises coefficient_out_of_range (a bug, not an input error).
sparse_polynomial build_phi_pq(std::uint64_t p, std::uint64_t q);

std::uint64_t nonzero_count(const sparse_polynomial& poly);

// theta^2 > m and 2*theta < m, both exact.
bool check_theta_bounds(const binary_modulus& bm);

// theta > max(p, q).
bool theta_exceeds_larger_prime(const binary_modulus& bm);

} // namespace cyclo
