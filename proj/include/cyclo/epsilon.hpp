#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "cyclo/error.hpp"

namespace cyclo {

// Exact rational epsilon = num/den.  Every threshold predicate in the
// library takes epsilon in this form; decimals are rejected at parse time
// so no floating point can leak into a set definition.
struct epsilon {
    std::uint64_t num = 0;
    std::uint64_t den = 1;

    epsilon() = default;

    epsilon(std::uint64_t u, std::uint64_t v) : num(u), den(v) {
        if (den == 0)
            throw error(errc::bad_format, "epsilon: zero denominator");
        if (num == 0)
            throw error(errc::epsilon_out_of_range, "epsilon: must be positive");
        const std::uint64_t g = std::gcd(num, den);
        num /= g;
        den /= g;
        // The predicates raise integers to powers of order den; a cap keeps
        // that arithmetic sane and overflow-free.
        if (den > 1000000)
            throw error(errc::epsilon_out_of_range,
                        "epsilon: denominator above 10^6 after reduction");
    }

    // Accepts exactly "u/v" with positive integers, e.g. "1/10".
    static epsilon parse(const std::string& text);

    std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }

    double value() const { return static_cast<double>(num) / static_cast<double>(den); }

    bool less_than_one() const { return num < den; }
    bool less_than_half() const { return 2 * num < den; }
    bool less_than_sixth() const { return 6 * num < den; }

    // Range guards used by the theorem-part predicates.
    void require_below_one(const char* who) const {
        if (!less_than_one())
            throw error(errc::epsilon_out_of_range,
                        std::string(who) + ": requires eps < 1, got " + str());
    }
    void require_below_half(const char* who) const {
        if (!less_than_half())
            throw error(errc::epsilon_out_of_range,
                        std::string(who) + ": requires eps < 1/2, got " + str());
    }
    void require_below_sixth(const char* who) const {
        if (!less_than_sixth())
            throw error(errc::epsilon_out_of_range,
                        std::string(who) + ": requires eps < 1/6, got " + str());
    }

    friend bool operator==(const epsilon& a, const epsilon& b) {
        return a.num == b.num && a.den == b.den;
    }
};

} // namespace cyclo
