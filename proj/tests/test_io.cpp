#include <doctest.h>

#include <algorithm>

#include "cyclo/io.hpp"
#include "cyclo/reference.hpp"

using namespace cyclo;

TEST_CASE("theta_line format") {
    CHECK(io::theta_line(make_binary_modulus(3, 5)) == "15 3 5 2 2 7");
    CHECK(io::theta_line(make_binary_modulus(3, 7)) == "21 3 7 5 1 9");
}

TEST_CASE("poly_csv format") {
    const auto phi15 = build_phi_pq(3, 5);
    const std::string csv = io::poly_csv(phi15);
    CHECK(csv == "0,1\n1,-1\n3,1\n4,-1\n5,1\n7,-1\n8,1\n");
    // row count equals theta
    CHECK(std::count(csv.begin(), csv.end(), '\n') ==
          static_cast<long>(make_binary_modulus(3, 5).theta));
}

TEST_CASE("bset_csv emits, re-parses, and re-validates") {
    const auto t = factor_table::build(4000);
    const auto rows = enumerate_b(t, 4000, epsilon(2, 5));
    REQUIRE(!rows.empty());
    const std::string csv = io::bset_csv(rows);
    CHECK(csv.substr(0, 25) == "m,p,q,p_inv,q_inv,theta\n1");

    const auto parsed = io::parse_bset_csv(csv);
    REQUIRE(parsed.size() == rows.size());
    std::uint64_t prev_m = 0;
    for (std::size_t i = 0; i < parsed.size(); ++i) {
        const auto& bm = parsed[i];
        CHECK(bm.m == rows[i].m);
        // all binary_modulus invariants hold on the re-parsed values
        CHECK(bm.p * bm.q == bm.m);
        CHECK(bm.p_inv >= 1);
        CHECK(bm.p_inv <= bm.q - 1);
        CHECK(bm.q_inv >= 1);
        CHECK(bm.q_inv <= bm.p - 1);
        CHECK((bm.p * bm.p_inv) % bm.q == 1);
        CHECK((bm.q * bm.q_inv) % bm.p == 1);
        CHECK(bm.theta == 2 * bm.p_inv * bm.q_inv - 1);
        CHECK(bm.pp() + bm.qq() == bm.m + 1);
        CHECK(bm.pp() != bm.qq());
        CHECK(bm.m > prev_m);
        prev_m = bm.m;
    }

    CHECK_THROWS_AS(io::parse_bset_csv("m,p,q\n"), error);
    CHECK_THROWS_AS(io::parse_bset_csv("m,p,q,p_inv,q_inv,theta\n15,3\n"), error);
}

TEST_CASE("aset_csv format") {
    const auto t = factor_table::build(100);
    const auto rows = enumerate_a(t, 10, epsilon(2, 5));
    CHECK(io::aset_csv(t, rows) == "n,P_n,P_n1\n2,2,3\n5,5,3\n6,3,7\n");
}

TEST_CASE("report_json keys and determinism across worker counts") {
    const auto t = factor_table::build(10000);
    const auto r1 = build_report(t, 10000, epsilon(1, 4), 1);
    const auto r8 = build_report(t, 10000, epsilon(1, 4), 8);
    const std::string j1 = io::report_json(r1);
    const std::string j8 = io::report_json(r8);
    CHECK(j1 == j8);  // byte-identical

    for (const char* key :
         {"\"limit\"", "\"eps\"", "\"count_A_sqrt\"", "\"count_B\"", "\"count_binary\"",
          "\"ratio_B_sqrtN\"", "\"ratio_B_partIII\"", "\"landau_ratio\"",
          "\"part3_pair_bound\"", "\"part3_sum1\"", "\"part3_sum2\""})
        CHECK(j1.find(key) != std::string::npos);
    CHECK(j1.find("\"eps\": \"1/4\"") != std::string::npos);
}

TEST_CASE("map_report_json keys, caps, exact totals") {
    map_report rep;
    rep.eps = epsilon(2, 5);
    rep.limit = 100;
    for (std::uint64_t i = 0; i < 5; ++i)
        rep.violations_f_sparsity.push_back({10 + i, 100 + i, 7});
    rep.max_violator_m0 = 104;
    rep.collisions_f.push_back({3, 9, 15});
    rep.max_collision_m1 = 15;

    const std::string full = io::map_report_json(rep, 1000);
    const std::string capped = io::map_report_json(rep, 2);
    CHECK(full != capped);
    CHECK(full.find("104") != std::string::npos);
    CHECK(capped.find("103") == std::string::npos);  // entries beyond the cap dropped
    const std::string total_key = "\"violations_f_sparsity_total\": 5";
    CHECK(full.find(total_key) != std::string::npos);
    CHECK(capped.find(total_key) != std::string::npos);  // totals exact even when capped

    for (const char* key :
         {"\"eps\"", "\"limit\"", "\"violations_f_sparsity\"", "\"max_violator_m0\"",
          "\"collisions_f\"", "\"max_collision_m1\"", "\"roundtrip_failures\"",
          "\"max_g_failure_m2\"", "\"aset_failures_g\"", "\"empirical_C\"", "\"g_injective\"",
          "\"scanned_b_size\"", "\"product_bound_failures\""})
        CHECK(full.find(key) != std::string::npos);
}
