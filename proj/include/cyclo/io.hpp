#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cyclo/census.hpp"
#include "cyclo/core.hpp"
#include "cyclo/maps.hpp"

namespace cyclo::io {

// CSV for B-set listings: header "m,p,q,p_inv,q_inv,theta", one row per
// element, ascending m, trailing newline.  p < q labels.
std::string bset_csv(const std::vector<binary_modulus>& rows);

// Parses bset_csv output back into moduli (used by the round-trip checks).
std::vector<binary_modulus> parse_bset_csv(const std::string& text);

// CSV for A-set listings: header "n,P_n,P_n1".
std::string aset_csv(const factor_table& table, const std::vector<std::uint64_t>& rows);

// CSV rows "exponent,coefficient" ascending, no header.
std::string poly_csv(const sparse_polynomial& poly);

// Plain line "m p q p_inv q_inv theta".
std::string theta_line(const binary_modulus& bm);

// JSON with keys exactly matching the census_report fields, insertion order.
std::string report_json(const census_report& report);

// JSON array of reports (one per epsilon of a grid), same keys per entry.
std::string report_grid_json(const std::vector<census_report>& reports);

// JSON with keys exactly matching the map_report fields.  Lists longer than
// max_list are truncated; the *_total keys always carry the exact counts.
std::string map_report_json(const map_report& report, std::size_t max_list = 100);

} // namespace cyclo::io
