#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "cyclo/census.hpp"
#include "cyclo/power_cmp.hpp"
#include "cyclo/reference.hpp"
#include "oracles.hpp"

using namespace cyclo;

namespace {

std::vector<std::uint64_t> moduli_of(const std::vector<binary_modulus>& v) {
    std::vector<std::uint64_t> out;
    for (const auto& bm : v) out.push_back(bm.m);
    return out;
}

} // namespace

TEST_CASE("enumerate_binary frozen small sets") {
    const auto t = factor_table::build(200);
    CHECK(moduli_of(enumerate_binary(t, 36)) == std::vector<std::uint64_t>{15, 21, 33, 35});
    CHECK(enumerate_binary(t, 15).empty());  // strict m < 15
    CHECK(enumerate_binary(t, 16).size() == 1);

    // Recomputed exactly: the 16 binary m below 100.
    const std::vector<std::uint64_t> below100 = {15, 21, 33, 35, 39, 51, 55, 57,
                                                 65, 69, 77, 85, 87, 91, 93, 95};
    CHECK(moduli_of(enumerate_binary(t, 100)) == below100);
    CHECK(moduli_of(enumerate_binary(t, 100)) == oracle::binary_list(100));
}

TEST_CASE("enumerate_binary against the trial-division oracle") {
    const auto t = factor_table::build(5000);
    const auto got = moduli_of(enumerate_binary(t, 5000));
    CHECK(got == oracle::binary_list(5000));
    CHECK(std::is_sorted(got.begin(), got.end()));
    CHECK(std::adjacent_find(got.begin(), got.end()) == got.end());  // no duplicates

    // grouped order carries the same multiset
    auto grouped = moduli_of(enumerate_binary(t, 5000, binary_order::grouped_by_p));
    std::sort(grouped.begin(), grouped.end());
    CHECK(grouped == got);
}

TEST_CASE("count_binary_leq consistency") {
    const auto t = factor_table::build(5000);
    CHECK(count_binary_leq(t, 100) == enumerate_binary(t, 101).size());
    CHECK(count_binary_leq(t, 14) == 0);
    CHECK(count_binary_leq(t, 15) == 1);
    for (std::uint64_t bound : {500ull, 2500ull, 4999ull})
        CHECK(count_binary_leq(t, bound) == ref::count_binary_leq(t, bound));
}

TEST_CASE("in_b frozen examples") {
    const auto m15 = make_binary_modulus(3, 5);   // theta 7
    const auto m21 = make_binary_modulus(3, 7);   // theta 9
    CHECK(in_b(m15, epsilon(2, 5)));              // 7^10 < 15^9
    CHECK_FALSE(in_b(m15, epsilon(1, 10)));       // 7^20 > 15^12
    CHECK(in_b(m21, epsilon(2, 5)));              // 9^10 < 21^9
    CHECK_THROWS_AS(in_b(m15, epsilon(2, 3)), error);  // eps >= 1/2
    CHECK_THROWS_AS(in_b(m15, epsilon(1, 2)), error);
}

TEST_CASE("enumerate_b frozen and cross-checked") {
    const auto t = factor_table::build(40000);
    const epsilon e25(2, 5);

    // B_{2/5}(36): all four binary m below 36 qualify.
    CHECK(moduli_of(enumerate_b(t, 36, e25)) == std::vector<std::uint64_t>{15, 21, 33, 35});
    // B_{1/10}(36) is empty: even theta = 7 fails 7^20 < 15^12.
    CHECK(enumerate_b(t, 36, epsilon(1, 10)).empty());

    for (auto [u, v] : {std::pair{2ull, 5ull}, {1ull, 4ull}, {1ull, 10ull}}) {
        const epsilon eps(u, v);
        const auto fast = enumerate_b(t, 30000, eps);
        const auto slow = ref::enumerate_b(t, 30000, eps);
        REQUIRE(fast.size() == slow.size());
        for (std::size_t i = 0; i < fast.size(); ++i) {
            CHECK(fast[i].m == slow[i].m);
            CHECK(fast[i].theta == slow[i].theta);
        }
        const auto ms = moduli_of(fast);
        CHECK(std::is_sorted(ms.begin(), ms.end()));
    }
}

TEST_CASE("B counts are monotone in eps and in N") {
    const auto t = factor_table::build(20000);
    const auto b1 = enumerate_b(t, 20000, epsilon(1, 10)).size();
    const auto b2 = enumerate_b(t, 20000, epsilon(1, 4)).size();
    const auto b3 = enumerate_b(t, 20000, epsilon(2, 5)).size();
    CHECK(b1 <= b2);
    CHECK(b2 <= b3);

    std::uint64_t prev = 0;
    for (std::uint64_t limit : {2000ull, 5000ull, 10000ull, 20000ull}) {
        const auto count = enumerate_b(t, limit, epsilon(1, 4)).size();
        CHECK(count >= prev);
        prev = count;
    }
}

TEST_CASE("part3_prime_constraint frozen examples") {
    CHECK(part3_prime_constraint(3, 5, epsilon(2, 5)));        // 5^1 < 3^9
    CHECK(part3_prime_constraint(3, 5, epsilon(1, 10)));       // 5^8 < 3^12
    CHECK_FALSE(part3_prime_constraint(3, 7, epsilon(1, 10))); // 7^8 > 3^12
    CHECK_THROWS_AS(part3_prime_constraint(3, 5, epsilon(1, 2)), error);
    CHECK_THROWS_AS(part3_prime_constraint(7, 3, epsilon(1, 10)), error);  // labels p < q
}

TEST_CASE("part3_pair_bound matches pairwise reference") {
    const auto t = factor_table::build(40000);
    for (auto [u, v] : {std::pair{2ull, 5ull}, {1ull, 4ull}, {1ull, 10ull}}) {
        const epsilon eps(u, v);
        for (std::uint64_t limit : {36ull, 100ull, 5000ull, 40000ull})
            CHECK(part3_pair_bound(t, limit, eps) == ref::part3_pair_bound(t, limit, eps));
    }
    CHECK(part3_pair_bound(t, 36, epsilon(2, 5)) >= 2);
    // at eps = 1/10: (3,5) and (5,7) qualify, (3,7) and (3,11) do not
    CHECK(part3_pair_bound(t, 36, epsilon(1, 10)) == 2);
}

TEST_CASE("pair bound contains the B census") {
    const auto t = factor_table::build(50000);
    for (auto [u, v] : {std::pair{1ull, 10ull}, {1ull, 4ull}, {2ull, 5ull}}) {
        const epsilon eps(u, v);
        for (std::uint64_t limit : {1000ull, 10000ull, 50000ull}) {
            // containment is rigorous provided theta > q throughout, which
            // theta_sweep verifies exhaustively
            const auto sweep = theta_sweep(t, limit);
            REQUIRE(sweep.larger_prime_failures == 0);
            CHECK(enumerate_b(t, limit, eps).size() <= part3_pair_bound(t, limit, eps));
        }
    }
}

TEST_CASE("part3_literal_sums shape properties") {
    const auto t = factor_table::build(100000);
    for (auto [u, v] : {std::pair{1ull, 10ull}, {1ull, 4ull}}) {
        const epsilon eps(u, v);
        for (std::uint64_t limit : {10000ull, 100000ull}) {
            const auto [s1, s2] = part3_literal_sums(t, limit, eps);
            // sum1 <= pi(N^{1/2-eps}) * pi(N^{1/2+eps})
            const std::uint64_t lo_end = floor_power(limit, v - 2 * u, 2 * v);
            const std::uint64_t hi_end = floor_power(limit, v + 2 * u, 2 * v);
            CHECK(s1 <= t.prime_pi(lo_end) * t.prime_pi(std::min(hi_end, t.limit())));
            // sum2 <= pi(N^{1/2})^2
            const std::uint64_t sq = t.prime_pi(floor_power(limit, 1, 2));
            CHECK(s2 <= sq * sq);
        }
    }
}

TEST_CASE("theta_sweep parallel equals reference and is all clean") {
    const auto t = factor_table::build(60000);
    const auto par = theta_sweep(t, 60000, 3);
    const auto ser = ref::theta_sweep(t, 60000);
    CHECK(par.checked == ser.checked);
    CHECK(par.checked == count_binary_leq(t, 60000));
    CHECK(par.bounds_failures == 0);
    CHECK(par.larger_prime_failures == 0);
    CHECK(par.identity_failures == 0);
    CHECK(par.distinct_failures == 0);
    CHECK(ser.bounds_failures == 0);
}

TEST_CASE("theorem shape ratios stay tame on a dyadic grid") {
    const auto t = factor_table::build(1 << 16);
    const epsilon eps(1, 4);
    double first_sqrt = 0.0, first_log = 0.0;
    for (int k = 12; k <= 16; ++k) {
        const std::uint64_t n = 1ull << k;
        const double count = static_cast<double>(enumerate_b(t, n, eps).size());
        REQUIRE(count > 0);
        const double r_sqrt = count / std::sqrt(static_cast<double>(n));
        const double r_log =
            count * std::log(static_cast<double>(n)) * std::log(static_cast<double>(n)) / n;
        if (k == 12) {
            first_sqrt = r_sqrt;
            first_log = r_log;
            continue;
        }
        // bounded away from 0 below, bounded above, with generous slack
        CHECK(r_sqrt >= first_sqrt / 4.0);
        CHECK(r_log <= 4.0 * first_log);
    }
}

TEST_CASE("landau_ratio") {
    const auto t = factor_table::build(100000);
    CHECK_THROWS_AS(landau_ratio(t, 15), error);
    const double r = landau_ratio(t, 100000);
    CHECK(r > 0.0);
    CHECK(r < 10.0);
}

TEST_CASE("build_report invariants") {
    const auto t = factor_table::build(10000);
    const auto r = build_report(t, 10000, epsilon(2, 5));
    CHECK(r.count_B <= r.count_binary);
    CHECK(r.count_B <= r.part3_pair_bound);
    CHECK(r.count_A_sqrt <= 100);  // floor(sqrt(10^4))
    CHECK(r.count_binary == count_binary_leq(t, 9999));
    CHECK(r.ratio_B_sqrtN > 0.0);
    CHECK(r.landau_ratio > 0.0);

    const auto r100 = build_report(t, 100, epsilon(2, 5));
    CHECK(r100.count_B <= r100.count_binary);
    CHECK(r100.count_binary == 16);
}

TEST_CASE("census kernels are worker-count independent") {
    const auto t = factor_table::build(30000);
    const epsilon eps(1, 4);
    const auto b1 = enumerate_b(t, 30000, eps, 1);
    const auto b5 = enumerate_b(t, 30000, eps, 5);
    REQUIRE(b1.size() == b5.size());
    for (std::size_t i = 0; i < b1.size(); ++i) CHECK(b1[i].m == b5[i].m);

    CHECK(count_binary_leq(t, 29999, 1) == count_binary_leq(t, 29999, 7));
    CHECK(part3_pair_bound(t, 30000, eps, 1) == part3_pair_bound(t, 30000, eps, 6));
}
