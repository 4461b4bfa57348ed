#include "affcert/rational.hpp"

#include <cctype>
#include <ostream>

namespace affcert {

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational Rational::parse(std::string_view s) {
    auto bad = [&] { throw std::invalid_argument("malformed rational: '" + std::string(s) + "'"); };
    size_t pos = 0;
    auto read_int = [&]() -> Integer {
        bool neg = false;
        if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) neg = s[pos++] == '-';
        size_t start = pos;
        while (pos < s.size() && std::isdigit((unsigned char)s[pos])) ++pos;
        if (pos == start) bad();
        Integer v(std::string(s.substr(start, pos - start)));
        return neg ? Integer(-v) : v;
    };
    Integer num = read_int();
    Integer den = 1;
    if (pos < s.size() && s[pos] == '/') {
        ++pos;
        den = read_int();
        if (den == 0) throw DivisionByZero();
    }
    if (pos != s.size()) bad();
    return Rational(num, den);
}

}  // namespace affcert
