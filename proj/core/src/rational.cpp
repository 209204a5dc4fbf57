#include "cubiq/rational.hpp"

#include <ostream>

namespace cubiq {

Rat Rat::parse(const std::string& s) {
    std::string t;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
    if (t.empty()) throw ParseError("empty rational literal");

    auto parse_int = [](const std::string& w) {
        Int n;
        if (w.empty() || mpz_set_str(n.get_mpz_t(), w.c_str(), 10) != 0)
            throw ParseError("bad integer literal '" + w + "'");
        return n;
    };

    auto slash = t.find('/');
    if (slash == std::string::npos) return Rat(parse_int(t));
    Int num = parse_int(t.substr(0, slash));
    Int den = parse_int(t.substr(slash + 1));
    if (sgn(den) == 0) throw ParseError("zero denominator in '" + s + "'");
    return Rat(num, den);
}

std::ostream& operator<<(std::ostream& os, const Rat& r) {
    return os << r.to_string();
}

Rat pow_int(const Rat& base, long e) {
    if (e < 0) return pow_int(base.inverse(), -e);
    Rat acc(1), b = base;
    while (e > 0) {
        if (e & 1) acc *= b;
        b *= b;
        e >>= 1;
    }
    return acc;
}

}  // namespace cubiq
