#pragma once

#include <stdexcept>
#include <string>

namespace cyclo {

enum class errc {
    not_prime,
    equal_primes,
    even_prime,
    not_invertible,
    zero_residue,
    not_binary,
    out_of_range,
    epsilon_out_of_range,
    coefficient_out_of_range,
    bad_format,
    limit_too_small,
    limit_too_large,
    out_of_memory,
};

// Domain and resource failures share one exception type; is_resource()
// drives the CLI exit-code split (2 = domain, 3 = resource).
class error : public std::runtime_error {
public:
    error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

    errc code() const noexcept { return code_; }

    bool is_resource() const noexcept {
        return code_ == errc::out_of_memory || code_ == errc::limit_too_large;
    }

private:
    errc code_;
};

} // namespace cyclo
