#include "hopfrep/rational.hpp"

#include "hopfrep/error.hpp"

namespace hopfrep {

std::string rational_to_string(const Rational& q) {
    return q.str();
}

Rational rational_from_string(const std::string& text) {
    if (text.empty()) fail(errk::ParseError, "empty rational literal");
    for (char ch : text) {
        if (!(std::isdigit(static_cast<unsigned char>(ch)) || ch == '-' || ch == '+' || ch == '/'))
            fail(errk::ParseError, "bad character in rational literal '" + text + "'");
    }
    try {
        Rational q(text);
        return q;
    } catch (const std::exception&) {
        fail(errk::ParseError, "unparseable rational literal '" + text + "'");
    }
}

std::optional<Rational> rational_sqrt(const Rational& q) {
    if (q < 0) return std::nullopt;
    Integer n = rat_num(q), d = rat_den(q);
    Integer sn = sqrt(n), sd = sqrt(d);
    if (sn * sn != n || sd * sd != d) return std::nullopt;
    return Rational(sn, sd);
}

} // namespace hopfrep
