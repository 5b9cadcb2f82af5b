#include "tverwind/rational.hpp"

#include "tverwind/errors.hpp"

#include <cctype>

namespace tverwind {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }

    Rational value;
    if (auto slash = body.find('/'); slash != std::string_view::npos) {
        auto num = body.substr(0, slash);
        auto den = body.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den))
            throw ParseError("", "invalid rational '" + std::string(text) + "'");
        Integer d(std::string(den), 10);
        if (d == 0) throw ParseError("", "zero denominator in '" + std::string(text) + "'");
        value = Rational(Integer(std::string(num), 10), d);
    } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
        auto ip = body.substr(0, dot);
        auto fp = body.substr(dot + 1);
        if ((ip.empty() && fp.empty()) || (!ip.empty() && !all_digits(ip)) ||
            (!fp.empty() && !all_digits(fp)))
            throw ParseError("", "invalid decimal '" + std::string(text) + "'");
        Integer num(std::string(ip.empty() ? "0" : ip) + std::string(fp), 10);
        Integer den;
        mpz_ui_pow_ui(den.get_mpz_t(), 10, fp.size());
        value = Rational(num, den);
    } else {
        if (!all_digits(body))
            throw ParseError("", "invalid rational '" + std::string(text) + "'");
        value = Rational(Integer(std::string(body), 10));
    }
    value.canonicalize();
    if (negative) value = -value;
    return value;
}

std::string to_string(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string to_string(const Rational2& p) {
    return "(" + to_string(p.x) + ", " + to_string(p.y) + ")";
}

}  // namespace tverwind
