#include "cyclo/core.hpp"

#include <algorithm>
#include <cstdlib>
#include <new>
#include <vector>

namespace cyclo {

long long sparse_polynomial::eval_at_one() const {
    long long sum = 0;
    for (const auto& [e, c] : terms) sum += c;
    return sum;
}

bool sparse_polynomial::is_palindromic() const {
    // Self-reciprocal: term (e, c) mirrors to (deg - e, c).
    if (terms.empty()) return true;
    const std::uint64_t deg = terms.back().first;
    std::size_t i = 0, j = terms.size() - 1;
    while (i <= j) {
        if (terms[i].first + terms[j].first != deg) return false;
        if (terms[i].second != terms[j].second) return false;
        if (j == 0) break;
        ++i;
        --j;
    }
    return true;
}

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t modulus) {
    if (modulus < 2) throw error(errc::out_of_range, "mod_inverse: modulus must be >= 2");
    a %= modulus;
    if (a == 0) throw error(errc::zero_residue, "mod_inverse: a is 0 mod modulus");

    // Extended Euclid on (a, modulus); Bezout coefficients are bounded by
    // the modulus, so 128-bit signed intermediates cover the full u64 range.
    __int128 t = 0, new_t = 1;
    std::uint64_t r = modulus, new_r = a;
    while (new_r != 0) {
        const std::uint64_t quot = r / new_r;
        const __int128 tmp_t = t - static_cast<__int128>(quot) * new_t;
        t = new_t;
        new_t = tmp_t;
        const std::uint64_t tmp_r = r - quot * new_r;
        r = new_r;
        new_r = tmp_r;
    }
    if (r != 1) throw error(errc::not_invertible, "mod_inverse: gcd(a, modulus) != 1");
    if (t < 0) t += modulus;
    return static_cast<std::uint64_t>(t);
}

namespace {

inline std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

} // namespace

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull,
                            31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // This base set is deterministic for all 64-bit inputs.
    for (std::uint64_t a : {2ull, 325ull, 9375ull, 28178ull, 450775ull, 9780504ull,
                            1795265022ull}) {
        std::uint64_t x = powmod_u64(a % n, d, n);
        if (x == 0 || x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

namespace detail {

binary_modulus make_from_primes(std::uint64_t p, std::uint64_t q) {
    binary_modulus bm;
    bm.p = p;
    bm.q = q;
    bm.m = p * q;
    bm.p_inv = mod_inverse(p, q);
    bm.q_inv = mod_inverse(q, p);
    bm.theta = 2 * bm.p_inv * bm.q_inv - 1;
    return bm;
}

} // namespace detail

binary_modulus make_binary_modulus(std::uint64_t p, std::uint64_t q) {
    if (p == 2 || q == 2) throw error(errc::even_prime, "make_binary_modulus: prime 2 not allowed");
    if (!is_prime_u64(p)) throw error(errc::not_prime, "make_binary_modulus: p is not prime");
    if (!is_prime_u64(q)) throw error(errc::not_prime, "make_binary_modulus: q is not prime");
    if (p == q) throw error(errc::equal_primes, "make_binary_modulus: p == q");
    // m < 2^63 keeps every derived quantity (2*p_inv*q_inv, m+1) in u64.
    if (p > (UINT64_MAX / 2) / q)
        throw error(errc::limit_too_large, "make_binary_modulus: p*q too large");
    return detail::make_from_primes(p, q);
}

sparse_polynomial build_phi_pq(std::uint64_t p, std::uint64_t q) {
    if (p == 2 || q == 2) throw error(errc::even_prime, "build_phi_pq: prime 2 not allowed");
    if (!is_prime_u64(p)) throw error(errc::not_prime, "build_phi_pq: p is not prime");
    if (!is_prime_u64(q)) throw error(errc::not_prime, "build_phi_pq: q is not prime");
    if (p == q) throw error(errc::equal_primes, "build_phi_pq: p == q");

    // Phi_pq = (1 - x^{pq})(1 - x) / ((1 - x^p)(1 - x^q)); the numerator
    // factor x^{pq} lies beyond degree (p-1)(q-1), so modulo x^{deg+1} the
    // series is (1 - x) * sum x^{ip} * sum x^{jq}.  Each in-place pass
    // c[i] += c[i - s] multiplies by 1/(1 - x^s).
    if (p - 1 > UINT64_MAX / (q - 1))
        throw error(errc::limit_too_large, "build_phi_pq: degree overflows");
    const std::uint64_t deg = (p - 1) * (q - 1);
    std::vector<std::int8_t> coeff;
    try {
        coeff.assign(deg + 1, 0);
    } catch (const std::bad_alloc&) {
        throw error(errc::out_of_memory, "build_phi_pq: degree too large for memory");
    }
    coeff[0] = 1;
    if (deg >= 1) coeff[1] = -1;
    for (std::uint64_t s : {p, q}) {
        for (std::uint64_t i = s; i <= deg; ++i) {
            coeff[i] = static_cast<std::int8_t>(coeff[i] + coeff[i - s]);
        }
    }

    sparse_polynomial poly;
    for (std::uint64_t i = 0; i <= deg; ++i) {
        const int c = coeff[i];
        if (c == 0) continue;
        if (c != 1 && c != -1)
            throw error(errc::coefficient_out_of_range,
                        "build_phi_pq: coefficient outside {-1,0,1} at exponent " +
                            std::to_string(i));
        poly.terms.emplace_back(i, c);
    }
    return poly;
}

std::uint64_t nonzero_count(const sparse_polynomial& poly) {
    return poly.terms.size();
}

bool check_theta_bounds(const binary_modulus& bm) {
    const unsigned __int128 theta_sq =
        static_cast<unsigned __int128>(bm.theta) * bm.theta;
    return theta_sq > bm.m && 2 * static_cast<unsigned __int128>(bm.theta) < bm.m;
}

bool theta_exceeds_larger_prime(const binary_modulus& bm) {
    return bm.theta > std::max(bm.p, bm.q);
}

} // namespace cyclo
