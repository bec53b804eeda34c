#include "cyclo/epsilon.hpp"

#include <charconv>

namespace cyclo {

epsilon epsilon::parse(const std::string& text) {
    const auto slash = text.find('/');
    if (slash == std::string::npos || slash == 0 || slash + 1 >= text.size())
        throw error(errc::bad_format,
                    "epsilon: expected exact rational \"u/v\", got \"" + text + "\"");

    const auto parse_u64 = [&](const char* first, const char* last) -> std::uint64_t {
        std::uint64_t value = 0;
        const auto [ptr, ec] = std::from_chars(first, last, value);
        if (ec != std::errc{} || ptr != last)
            throw error(errc::bad_format,
                        "epsilon: expected exact rational \"u/v\", got \"" + text + "\"");
        return value;
    };

    const char* data = text.data();
    const std::uint64_t u = parse_u64(data, data + slash);
    const std::uint64_t v = parse_u64(data + slash + 1, data + text.size());
    if (v == 0) throw error(errc::bad_format, "epsilon: zero denominator in \"" + text + "\"");
    return epsilon(u, v);
}

} // namespace cyclo
