#include "drf/types.hpp"

#include <cstdlib>

namespace drf {

Frac parse_frac(const std::string& text) {
    auto bad = [&] { fail(errc::parse_error, "expected rational A or A/B, got '" + text + "'"); };
    Frac f;
    size_t slash = text.find('/');
    try {
        size_t used = 0;
        f.num = std::stoll(text.substr(0, slash), &used);
        if (used != (slash == std::string::npos ? text.size() : slash)) bad();
        if (slash == std::string::npos) {
            f.den = 1;
        } else {
            f.den = std::stoll(text.substr(slash + 1), &used);
            if (used != text.size() - slash - 1) bad();
        }
    } catch (const std::logic_error&) {
        bad();
    }
    if (f.den <= 0) fail(errc::parse_error, "rational denominator must be positive: '" + text + "'");
    return f;
}

std::string to_string(const Frac& f) {
    return std::to_string(f.num) + "/" + std::to_string(f.den);
}

} // namespace drf
