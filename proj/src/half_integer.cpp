#include "qgame/half_integer.hpp"

#include <cmath>
#include <cstdlib>

namespace qgame {

namespace {

bool parse_long(const std::string& s, long& out) {
    if (s.empty()) return false;
    char* end = nullptr;
    errno = 0;
    const long v = std::strtol(s.c_str(), &end, 10);
    if (errno != 0 || end != s.c_str() + s.size()) return false;
    out = v;
    return true;
}

} // namespace

HalfInteger HalfInteger::parse(const std::string& text) {
    const auto slash = text.find('/');
    if (slash != std::string::npos) {
        long num = 0, den = 0;
        if (!parse_long(text.substr(0, slash), num) ||
            !parse_long(text.substr(slash + 1), den) || den <= 0) {
            throw RepresentationError("not a half-integer: \"" + text + "\"");
        }
        if (den == 1) return HalfInteger(2 * num);
        if (den == 2) return HalfInteger(num);
        throw RepresentationError("not a half-integer: \"" + text + "\"");
    }
    long whole = 0;
    if (parse_long(text, whole)) return HalfInteger(2 * whole);
    char* end = nullptr;
    errno = 0;
    const double v = std::strtod(text.c_str(), &end);
    if (errno != 0 || end != text.c_str() + text.size() || text.empty()) {
        throw RepresentationError("not a half-integer: \"" + text + "\"");
    }
    return from_double(v);
}

HalfInteger HalfInteger::from_double(double value) {
    const double twice = 2.0 * value;
    const double rounded = std::round(twice);
    if (!std::isfinite(twice) || std::abs(twice - rounded) > 1e-9) {
        throw RepresentationError("not a half-integer: " +
                                  std::to_string(value));
    }
    return HalfInteger(static_cast<long>(rounded));
}

std::string HalfInteger::str() const {
    if (twice_ % 2 == 0) return std::to_string(twice_ / 2);
    return std::to_string(twice_) + "/2";
}

} // namespace qgame
