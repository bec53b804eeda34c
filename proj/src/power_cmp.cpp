#include "cyclo/power_cmp.hpp"

#include <bit>

#include <gmpxx.h>

namespace cyclo {

namespace {

// Number of bits in x, bit_len(1) = 1.  x >= 1.
inline unsigned bit_len(std::uint64_t x) {
    return 64u - static_cast<unsigned>(std::countl_zero(x));
}

int compare_gmp(std::uint64_t base, std::uint64_t n, std::uint64_t num, std::uint64_t den) {
    mpz_class lhs, rhs;
    mpz_ui_pow_ui(lhs.get_mpz_t(), static_cast<unsigned long>(base),
                  static_cast<unsigned long>(den));
    mpz_ui_pow_ui(rhs.get_mpz_t(), static_cast<unsigned long>(n),
                  static_cast<unsigned long>(num));
    return mpz_cmp(lhs.get_mpz_t(), rhs.get_mpz_t());
}

} // namespace

int compare_power(std::uint64_t base, std::uint64_t n, std::uint64_t num, std::uint64_t den) {
    // Classify x^e as 0, 1, or >1 (x^0 = 1, 0^e = 0 for e > 0).
    const auto size_class = [](std::uint64_t x, std::uint64_t e) -> int {
        if (e == 0 || x == 1) return 1;
        if (x == 0) return 0;
        return 2;
    };
    const int cl = size_class(base, den);
    const int cr = size_class(n, num);
    if (cl != 2 && cr != 2) return (cl > cr) - (cl < cr);
    if (cl != 2) return -1;
    if (cr != 2) return 1;

    // 2^{(b-1)*den} <= base^den < 2^{b*den} with b = bit_len(base); if the
    // two bit ranges do not overlap the comparison is already decided.
    const unsigned long long lb = static_cast<unsigned long long>(bit_len(base));
    const unsigned long long ln = static_cast<unsigned long long>(bit_len(n));
    const unsigned __int128 lhs_lo = static_cast<unsigned __int128>(lb - 1) * den;
    const unsigned __int128 lhs_hi = static_cast<unsigned __int128>(lb) * den;
    const unsigned __int128 rhs_lo = static_cast<unsigned __int128>(ln - 1) * num;
    const unsigned __int128 rhs_hi = static_cast<unsigned __int128>(ln) * num;
    if (lhs_lo >= rhs_hi) return 1;
    if (rhs_lo >= lhs_hi) return -1;

    return compare_gmp(base, n, num, den);
}

bool exceeds_power(std::uint64_t base, std::uint64_t n, std::uint64_t num, std::uint64_t den) {
    return compare_power(base, n, num, den) > 0;
}

std::uint64_t floor_power(std::uint64_t n, std::uint64_t num, std::uint64_t den) {
    if (n == 0) return 0;
    if (n == 1 || num == 0) return 1;
    mpz_class t, r;
    mpz_ui_pow_ui(t.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(num));
    mpz_root(r.get_mpz_t(), t.get_mpz_t(), static_cast<unsigned long>(den));
    return mpz_get_ui(r.get_mpz_t());
}

std::uint64_t floor_power_strict(std::uint64_t n, std::uint64_t num, std::uint64_t den) {
    std::uint64_t r = floor_power(n, num, den);
    // r^den <= n^num; back off one when equality holds so that r^den < n^num.
    if (r > 0 && compare_power(r, n, num, den) == 0) --r;
    return r;
}

int compare_prod_pow(std::uint64_t a1, std::uint64_t e1, std::uint64_t b1, std::uint64_t f1,
                     std::uint64_t a2, std::uint64_t e2, std::uint64_t b2, std::uint64_t f2) {
    mpz_class lhs, rhs, t;
    mpz_ui_pow_ui(lhs.get_mpz_t(), static_cast<unsigned long>(a1), static_cast<unsigned long>(e1));
    mpz_ui_pow_ui(t.get_mpz_t(), static_cast<unsigned long>(b1), static_cast<unsigned long>(f1));
    lhs *= t;
    mpz_ui_pow_ui(rhs.get_mpz_t(), static_cast<unsigned long>(a2), static_cast<unsigned long>(e2));
    mpz_ui_pow_ui(t.get_mpz_t(), static_cast<unsigned long>(b2), static_cast<unsigned long>(f2));
    rhs *= t;
    return mpz_cmp(lhs.get_mpz_t(), rhs.get_mpz_t());
}

} // namespace cyclo
