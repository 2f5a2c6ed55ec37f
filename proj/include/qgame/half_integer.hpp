#ifndef QGAME_HALF_INTEGER_HPP
#define QGAME_HALF_INTEGER_HPP

#include <string>

#include "qgame/errors.hpp"

namespace qgame {

/// Exact half-integer (spin-type quantum number), stored as twice its
/// value so equality and validation never touch floating point.
class HalfInteger {
public:
    HalfInteger() = default;

    static HalfInteger from_twice(long twice) { return HalfInteger(twice); }

    static HalfInteger from_int(long n) { return HalfInteger(2 * n); }

    /// Accepts "3/2", "-1/2", "2", "1.5"; rejects anything that is not an
    /// exact half-integer.
    static HalfInteger parse(const std::string& text);

    /// Validates that `value` is within 1e-9 of an exact half-integer.
    static HalfInteger from_double(double value);

    long twice() const { return twice_; }
    double value() const { return 0.5 * static_cast<double>(twice_); }

    /// "3/2" for odd twice-values, "2" for even ones.
    std::string str() const;

    bool operator==(const HalfInteger&) const = default;
    auto operator<=>(const HalfInteger&) const = default;

private:
    explicit HalfInteger(long twice) : twice_(twice) {}
    long twice_ = 0;
};

} // namespace qgame

#endif
