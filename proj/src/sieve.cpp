#include "cyclo/sieve.hpp"

#include <algorithm>
#include <cstring>
#include <fstream>
#include <new>

#include "cyclo/parallel.hpp"
#include "cyclo/power_cmp.hpp"

namespace cyclo {

factor_table factor_table::build(std::uint64_t limit) {
    if (limit < 2) throw error(errc::limit_too_small, "factor_table: limit must be >= 2");
    if (limit >= (1ull << 32))
        throw error(errc::limit_too_large, "factor_table: limit must be < 2^32");

    factor_table t;
    t.limit_ = limit;
    try {
        t.spf_.assign(limit + 1, 0);
    } catch (const std::bad_alloc&) {
        throw error(errc::out_of_memory, "factor_table: table does not fit in memory");
    }

    // Linear sieve: each composite is struck exactly once, by its smallest
    // prime factor.
    for (std::uint64_t i = 2; i <= limit; ++i) {
        if (t.spf_[i] == 0) {
            t.spf_[i] = static_cast<std::uint32_t>(i);
            t.primes_.push_back(static_cast<std::uint32_t>(i));
        }
        for (std::uint32_t p : t.primes_) {
            if (p > t.spf_[i]) break;
            const std::uint64_t next = static_cast<std::uint64_t>(p) * i;
            if (next > limit) break;
            t.spf_[next] = p;
        }
    }
    return t;
}

std::uint32_t factor_table::spf(std::uint64_t n) const {
    if (n < 2 || n > limit_)
        throw error(errc::out_of_range, "spf: n=" + std::to_string(n) + " outside 2.." +
                                            std::to_string(limit_));
    return spf_[n];
}

std::uint64_t factor_table::largest_prime_factor(std::uint64_t n) const {
    if (n == 1) return 1;  // convention, keeps in_a(1, eps) total
    if (n < 1 || n > limit_)
        throw error(errc::out_of_range, "largest_prime_factor: n=" + std::to_string(n) +
                                            " outside 1.." + std::to_string(limit_));
    std::uint64_t best = 1;
    while (n > 1) {
        const std::uint64_t p = spf_[n];
        if (p > best) best = p;
        do {
            n /= p;
        } while (n % p == 0);
    }
    return best;
}

std::uint64_t factor_table::prime_pi(std::uint64_t x) const {
    if (x > limit_)
        throw error(errc::out_of_range, "prime_pi: x=" + std::to_string(x) + " above limit " +
                                            std::to_string(limit_));
    const auto it = std::upper_bound(primes_.begin(), primes_.end(), x);
    return static_cast<std::uint64_t>(it - primes_.begin());
}

void factor_table::rebuild_primes() {
    primes_.clear();
    for (std::uint64_t n = 2; n <= limit_; ++n)
        if (spf_[n] == n) primes_.push_back(static_cast<std::uint32_t>(n));
}

namespace {

constexpr char kMagic[4] = {'S', 'P', 'F', 'T'};
constexpr std::uint32_t kVersion = 1;

void put_u32(std::ostream& os, std::uint32_t v) {
    unsigned char b[4] = {static_cast<unsigned char>(v), static_cast<unsigned char>(v >> 8),
                          static_cast<unsigned char>(v >> 16),
                          static_cast<unsigned char>(v >> 24)};
    os.write(reinterpret_cast<const char*>(b), 4);
}

void put_u64(std::ostream& os, std::uint64_t v) {
    put_u32(os, static_cast<std::uint32_t>(v));
    put_u32(os, static_cast<std::uint32_t>(v >> 32));
}

std::uint32_t get_u32(std::istream& is) {
    unsigned char b[4];
    is.read(reinterpret_cast<char*>(b), 4);
    return static_cast<std::uint32_t>(b[0]) | (static_cast<std::uint32_t>(b[1]) << 8) |
           (static_cast<std::uint32_t>(b[2]) << 16) | (static_cast<std::uint32_t>(b[3]) << 24);
}

std::uint64_t get_u64(std::istream& is) {
    const std::uint64_t lo = get_u32(is);
    const std::uint64_t hi = get_u32(is);
    return lo | (hi << 32);
}

} // namespace

void factor_table::save(const std::string& path) const {
    std::ofstream os(path, std::ios::binary | std::ios::trunc);
    if (!os) throw error(errc::bad_format, "sieve cache: cannot open for writing: " + path);
    os.write(kMagic, 4);
    put_u32(os, kVersion);
    put_u64(os, limit_);

    constexpr std::size_t kBlock = 1 << 16;
    std::vector<unsigned char> buf(kBlock * 4);
    std::uint64_t n = 2;
    while (n <= limit_) {
        std::size_t count = 0;
        for (; count < kBlock && n <= limit_; ++count, ++n) {
            const std::uint32_t v = spf_[n];
            buf[count * 4 + 0] = static_cast<unsigned char>(v);
            buf[count * 4 + 1] = static_cast<unsigned char>(v >> 8);
            buf[count * 4 + 2] = static_cast<unsigned char>(v >> 16);
            buf[count * 4 + 3] = static_cast<unsigned char>(v >> 24);
        }
        os.write(reinterpret_cast<const char*>(buf.data()),
                 static_cast<std::streamsize>(count * 4));
    }
    if (!os) throw error(errc::bad_format, "sieve cache: write failed: " + path);
}

factor_table factor_table::load(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw error(errc::bad_format, "sieve cache: cannot open: " + path);
    char magic[4];
    is.read(magic, 4);
    if (!is || std::memcmp(magic, kMagic, 4) != 0)
        throw error(errc::bad_format, "sieve cache: wrong magic in " + path);
    const std::uint32_t version = get_u32(is);
    if (!is || version != kVersion)
        throw error(errc::bad_format,
                    "sieve cache: unsupported version " + std::to_string(version));
    const std::uint64_t limit = get_u64(is);
    if (!is || limit < 2 || limit >= (1ull << 32))
        throw error(errc::bad_format, "sieve cache: bad limit field");

    factor_table t;
    t.limit_ = limit;
    try {
        t.spf_.assign(limit + 1, 0);
    } catch (const std::bad_alloc&) {
        throw error(errc::out_of_memory, "sieve cache: table does not fit in memory");
    }
    constexpr std::size_t kBlock = 1 << 16;
    std::vector<unsigned char> buf(kBlock * 4);
    std::uint64_t n = 2;
    while (n <= limit) {
        const std::size_t want = static_cast<std::size_t>(
            std::min<std::uint64_t>(kBlock, limit - n + 1));
        is.read(reinterpret_cast<char*>(buf.data()), static_cast<std::streamsize>(want * 4));
        if (static_cast<std::size_t>(is.gcount()) != want * 4)
            throw error(errc::bad_format, "sieve cache: truncated file " + path);
        for (std::size_t i = 0; i < want; ++i, ++n) {
            const std::uint32_t v = static_cast<std::uint32_t>(buf[i * 4]) |
                                    (static_cast<std::uint32_t>(buf[i * 4 + 1]) << 8) |
                                    (static_cast<std::uint32_t>(buf[i * 4 + 2]) << 16) |
                                    (static_cast<std::uint32_t>(buf[i * 4 + 3]) << 24);
            // Cheap integrity check: the entry must be a nontrivial divisor.
            if (v < 2 || v > n || n % v != 0)
                throw error(errc::bad_format,
                            "sieve cache: corrupt entry at n=" + std::to_string(n));
            t.spf_[n] = v;
        }
    }
    if (is.peek() != std::istream::traits_type::eof())
        throw error(errc::bad_format, "sieve cache: trailing bytes in " + path);
    t.rebuild_primes();
    return t;
}

bool in_a(const factor_table& table, std::uint64_t n, const epsilon& eps) {
    eps.require_below_one("in_a");
    if (n < 1 || n + 1 > table.limit())
        throw error(errc::out_of_range, "in_a: needs 1 <= n and n+1 <= table limit");
    // P(n) > n^{1-eps}  <=>  P(n)^v > n^{v-u}, exactly.
    const std::uint64_t pn = table.largest_prime_factor(n);
    if (!exceeds_power(pn, n, eps.den - eps.num, eps.den)) return false;
    const std::uint64_t pn1 = table.largest_prime_factor(n + 1);
    return exceeds_power(pn1, n + 1, eps.den - eps.num, eps.den);
}

std::vector<std::uint64_t> enumerate_a(const factor_table& table, std::uint64_t limit,
                                       const epsilon& eps, int workers) {
    eps.require_below_one("enumerate_a");
    if (limit > table.limit())
        throw error(errc::out_of_range, "enumerate_a: limit exceeds table limit");
    if (limit <= 1) return {};

    constexpr std::uint64_t kChunk = 1 << 14;
    auto chunks = par::map_chunks<std::vector<std::uint64_t>>(
        1, limit, kChunk, workers, [&](std::uint64_t lo, std::uint64_t hi) {
            std::vector<std::uint64_t> found;
            for (std::uint64_t n = lo; n < hi; ++n)
                if (in_a(table, n, eps)) found.push_back(n);
            return found;
        });

    std::vector<std::uint64_t> out;
    for (auto& c : chunks) out.insert(out.end(), c.begin(), c.end());
    return out;
}

} // namespace cyclo
