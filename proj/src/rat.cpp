#include "csc/rat.hpp"

#include "csc/errors.hpp"

#include <cctype>

namespace csc {

Int rat_floor(const Rat& r) {
    Int n = num(r);
    Int d = den(r);
    Int q = n / d;
    if (n < 0 && q * d != n) --q;
    return q;
}

std::string rat_to_string(const Rat& r) {
    std::string s = num(r).str();
    if (!is_integer(r)) {
        s += "/";
        s += den(r).str();
    }
    return s;
}

Rat rat_from_string(const std::string& s) {
    auto bad = [&] { throw ParseError("malformed rational: '" + s + "'"); };
    std::size_t pos = 0;
    auto read_int = [&]() -> Int {
        bool neg = false;
        if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
            neg = (s[pos] == '-');
            ++pos;
        }
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) bad();
        Int v(s.substr(start, pos - start));
        return neg ? Int(-v) : v;
    };
    Int n = read_int();
    Int d = 1;
    if (pos < s.size() && s[pos] == '/') {
        ++pos;
        d = read_int();
    }
    if (pos != s.size()) bad();
    if (d == 0) throw ParseError("zero denominator in '" + s + "'");
    return Rat(n, d);
}

} // namespace csc
