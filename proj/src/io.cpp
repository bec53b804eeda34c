#include "cyclo/io.hpp"

#include <sstream>

#include <json.hpp>

namespace cyclo::io {

using ordered_json = nlohmann::ordered_json;

std::string bset_csv(const std::vector<binary_modulus>& rows) {
    std::string out = "m,p,q,p_inv,q_inv,theta\n";
    for (const auto& bm : rows) {
        out += std::to_string(bm.m);
        out += ',';
        out += std::to_string(bm.p);
        out += ',';
        out += std::to_string(bm.q);
        out += ',';
        out += std::to_string(bm.p_inv);
        out += ',';
        out += std::to_string(bm.q_inv);
        out += ',';
        out += std::to_string(bm.theta);
        out += '\n';
    }
    return out;
}

std::vector<binary_modulus> parse_bset_csv(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    if (!std::getline(is, line) || line != "m,p,q,p_inv,q_inv,theta")
        throw error(errc::bad_format, "bset csv: missing or wrong header");
    std::vector<binary_modulus> out;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        binary_modulus bm;
        std::uint64_t* fields[6] = {&bm.m, &bm.p, &bm.q, &bm.p_inv, &bm.q_inv, &bm.theta};
        std::size_t pos = 0;
        for (int f = 0; f < 6; ++f) {
            const std::size_t next = f < 5 ? line.find(',', pos) : line.size();
            if (next == std::string::npos)
                throw error(errc::bad_format, "bset csv: short row: " + line);
            *fields[f] = std::stoull(line.substr(pos, next - pos));
            pos = next + 1;
        }
        out.push_back(bm);
    }
    return out;
}

std::string aset_csv(const factor_table& table, const std::vector<std::uint64_t>& rows) {
    std::string out = "n,P_n,P_n1\n";
    for (std::uint64_t n : rows) {
        out += std::to_string(n);
        out += ',';
        out += std::to_string(table.largest_prime_factor(n));
        out += ',';
        out += std::to_string(table.largest_prime_factor(n + 1));
        out += '\n';
    }
    return out;
}

std::string poly_csv(const sparse_polynomial& poly) {
    std::string out;
    for (const auto& [e, c] : poly.terms) {
        out += std::to_string(e);
        out += ',';
        out += std::to_string(c);
        out += '\n';
    }
    return out;
}

std::string theta_line(const binary_modulus& bm) {
    std::string out = std::to_string(bm.m);
    out += ' ';
    out += std::to_string(bm.p);
    out += ' ';
    out += std::to_string(bm.q);
    out += ' ';
    out += std::to_string(bm.p_inv);
    out += ' ';
    out += std::to_string(bm.q_inv);
    out += ' ';
    out += std::to_string(bm.theta);
    return out;
}

namespace {

ordered_json report_obj(const census_report& report) {
    ordered_json j;
    j["limit"] = report.limit;
    j["eps"] = report.eps.str();
    j["count_A_sqrt"] = report.count_A_sqrt;
    j["count_B"] = report.count_B;
    j["count_binary"] = report.count_binary;
    j["ratio_B_sqrtN"] = report.ratio_B_sqrtN;
    j["ratio_B_partIII"] = report.ratio_B_partIII;
    j["landau_ratio"] = report.landau_ratio;
    j["part3_pair_bound"] = report.part3_pair_bound;
    j["part3_sum1"] = report.part3_sum1;
    j["part3_sum2"] = report.part3_sum2;
    return j;
}

} // namespace

std::string report_json(const census_report& report) {
    return report_obj(report).dump(2) + "\n";
}

std::string report_grid_json(const std::vector<census_report>& reports) {
    ordered_json arr = ordered_json::array();
    for (const auto& r : reports) arr.push_back(report_obj(r));
    return arr.dump(2) + "\n";
}

std::string map_report_json(const map_report& report, std::size_t max_list) {
    ordered_json j;
    j["eps"] = report.eps.str();
    j["limit"] = report.limit;

    ordered_json fv = ordered_json::array();
    for (std::size_t i = 0; i < report.violations_f_sparsity.size() && i < max_list; ++i) {
        const auto& v = report.violations_f_sparsity[i];
        fv.push_back({v.n, v.m, v.theta});
    }
    j["violations_f_sparsity"] = std::move(fv);
    j["violations_f_sparsity_total"] = report.violations_f_sparsity.size();
    j["max_violator_m0"] = report.max_violator_m0;

    ordered_json fc = ordered_json::array();
    for (std::size_t i = 0; i < report.collisions_f.size() && i < max_list; ++i) {
        const auto& c = report.collisions_f[i];
        fc.push_back({c.n1, c.n2, c.m});
    }
    j["collisions_f"] = std::move(fc);
    j["collisions_f_total"] = report.collisions_f.size();
    j["max_collision_m1"] = report.max_collision_m1;

    j["domain_size"] = report.domain_size;
    j["qprime_bound_failures"] = report.qprime_bound_failures;
    j["theta_chain_failures"] = report.theta_chain_failures;
    j["dichotomy_failures"] = report.dichotomy_failures;

    ordered_json rf = ordered_json::array();
    for (std::size_t i = 0; i < report.roundtrip_failures.size() && i < max_list; ++i) {
        const auto& f = report.roundtrip_failures[i];
        rf.push_back({f.n, f.m, f.g_m});
    }
    j["roundtrip_failures"] = std::move(rf);
    j["roundtrip_failures_total"] = report.roundtrip_failures.size();
    j["max_g_failure_m2"] = report.max_g_failure_m2;

    ordered_json af = ordered_json::array();
    for (std::size_t i = 0; i < report.aset_failures_g.size() && i < max_list; ++i) {
        const auto& f = report.aset_failures_g[i];
        af.push_back({f.n, f.m, f.g_m});
    }
    j["aset_failures_g"] = std::move(af);
    j["aset_failures_g_total"] = report.aset_failures_g.size();
    j["max_aset_failure_g"] = report.max_aset_failure_g;

    j["scanned_b_size"] = report.scanned_b_size;
    j["product_bound_failures"] = report.product_bound_failures;
    j["prime_lower_bound_failures"] = report.prime_lower_bound_failures;
    j["g_injective"] = report.g_injective;
    j["empirical_C"] = {{"n_plus_1", report.empirical_C.n_plus_1},
                        {"m", report.empirical_C.m},
                        {"value", report.empirical_C.value}};
    return j.dump(2) + "\n";
}

} // namespace cyclo::io
