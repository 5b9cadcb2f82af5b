#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>

namespace tverwind {

using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p", "p/q" or a plain decimal "-12.375". Throws ParseError on
/// anything else, including a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical text form: "p" for integers, "p/q" otherwise (q > 0, reduced).
std::string to_string(const Rational& r);

/// num/den in canonical form.
inline Rational frac(long num, long den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

/// Exact point in the plane.
struct Rational2 {
    Rational x;
    Rational y;

    Rational2() = default;
    Rational2(Rational x_, Rational y_) : x(std::move(x_)), y(std::move(y_)) {}

    friend bool operator==(const Rational2& a, const Rational2& b) {
        return a.x == b.x && a.y == b.y;
    }
    /// Lexicographic (x, then y).
    friend std::strong_ordering operator<=>(const Rational2& a, const Rational2& b) {
        int c = cmp(a.x, b.x);
        if (c == 0) c = cmp(a.y, b.y);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend Rational2 operator+(const Rational2& a, const Rational2& b) {
        return {a.x + b.x, a.y + b.y};
    }
    friend Rational2 operator-(const Rational2& a, const Rational2& b) {
        return {a.x - b.x, a.y - b.y};
    }
};

std::string to_string(const Rational2& p);

}  // namespace tverwind
