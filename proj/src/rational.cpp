#include "wp/rational.hpp"

#include <cctype>

namespace wp {

Rational rational_from_string(std::string_view text) {
    std::size_t i = 0;
    auto fail = [&](const std::string& msg) -> ParseError { return ParseError(msg, i); };

    auto read_int = [&](bool allow_sign) -> BigInt {
        bool neg = false;
        if (allow_sign && i < text.size() && (text[i] == '+' || text[i] == '-')) {
            neg = text[i] == '-';
            ++i;
        }
        if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
            throw fail("expected an integer");
        BigInt v = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            v = v * 10 + (text[i] - '0');
            ++i;
        }
        return neg ? BigInt(-v) : v;
    };

    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    BigInt num = read_int(true);
    BigInt den = 1;
    if (i < text.size() && text[i] == '/') {
        ++i;
        den = read_int(true);
        if (den == 0) throw DivisionByZero("rational with zero denominator");
    }
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i != text.size()) throw fail("trailing characters in rational");
    return Rational(num, den);
}

std::string to_string(const Rational& r) {
    std::string s = numerator_of(r).str();
    if (!is_integer(r)) s += "/" + denominator_of(r).str();
    return s;
}

}  // namespace wp
