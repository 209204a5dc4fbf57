#include "cubiq/text.hpp"

#include <cctype>
#include <map>

#include "cubiq/errors.hpp"
#include "cubiq/qpoly.hpp"

namespace cubiq {

namespace {

struct Scanner {
    std::string s;
    size_t i = 0;

    explicit Scanner(std::string text) {
        for (char c : text)
            if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    }
    bool done() const { return i >= s.size(); }
    char peek() const { return s[i]; }
    bool eat(char c) {
        if (!done() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    Int integer() {
        size_t start = i;
        while (!done() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == start) throw ParseError("expected digits at '" + s.substr(start) + "'");
        return Int(s.substr(start, i - start));
    }
};

bool is_var(char c) {
    return c == 'x' || c == 'z';
}

}  // namespace

Poly<Rat> parse_poly(const std::string& text) {
    Scanner sc(text);
    if (sc.done()) throw ParseError("empty polynomial");
    std::map<unsigned long, Rat> terms;
    bool first = true;
    while (!sc.done()) {
        int sign = 1;
        if (sc.eat('+')) {
        } else if (sc.eat('-')) {
            sign = -1;
        } else if (!first) {
            throw ParseError("expected '+' or '-' at '" + sc.s.substr(sc.i) + "'");
        }
        first = false;

        Rat coeff(1);
        bool have_coeff = false;
        if (!sc.done() && std::isdigit(static_cast<unsigned char>(sc.peek()))) {
            Int num = sc.integer();
            Int den(1);
            if (sc.eat('/')) den = sc.integer();
            coeff = Rat(num, den);
            have_coeff = true;
            sc.eat('*');
        }
        unsigned long exp = 0;
        if (!sc.done() && is_var(sc.peek())) {
            ++sc.i;
            exp = 1;
            if (sc.eat('^')) {
                Int e = sc.integer();
                if (e > 4096) throw ParseError("exponent too large");
                exp = e.get_ui();
            }
        } else if (!have_coeff) {
            throw ParseError("expected a term at '" + sc.s.substr(sc.i) + "'");
        }
        if (sign < 0) coeff = -coeff;
        auto [it, fresh] = terms.emplace(exp, coeff);
        if (!fresh) it->second += coeff;
    }
    unsigned long deg = terms.rbegin()->first;
    std::vector<Rat> c(deg + 1, Rat());
    for (const auto& [e, v] : terms) c[e] = v;
    return Poly<Rat>(std::move(c));
}

namespace {

// Index of the top-level fraction bar, if the string is "num / den".
std::optional<size_t> fraction_bar(const std::string& s) {
    int depth = 0;
    for (size_t i = 0; i < s.size(); ++i) {
        char c = s[i];
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (depth < 0) throw ParseError("unbalanced parentheses in '" + s + "'");
        if (c != '/' || depth != 0) continue;
        bool touches_paren =
            (i > 0 && s[i - 1] == ')') || (i + 1 < s.size() && s[i + 1] == '(');
        bool spaced = i > 0 && i + 1 < s.size() &&
                      std::isspace(static_cast<unsigned char>(s[i - 1])) &&
                      std::isspace(static_cast<unsigned char>(s[i + 1]));
        if (touches_paren || spaced) return i;
    }
    if (depth != 0) throw ParseError("unbalanced parentheses in '" + s + "'");
    return std::nullopt;
}

std::string strip_outer(std::string s) {
    auto trim = [](std::string& t) {
        size_t a = t.find_first_not_of(" \t");
        size_t b = t.find_last_not_of(" \t");
        t = (a == std::string::npos) ? "" : t.substr(a, b - a + 1);
    };
    trim(s);
    while (s.size() >= 2 && s.front() == '(' && s.back() == ')') {
        int depth = 0;
        bool wraps = true;
        for (size_t i = 0; i + 1 < s.size(); ++i) {
            if (s[i] == '(') ++depth;
            if (s[i] == ')') --depth;
            if (depth == 0) {
                wraps = false;
                break;
            }
        }
        if (!wraps) break;
        s = s.substr(1, s.size() - 2);
        trim(s);
    }
    return s;
}

}  // namespace

RatFunc<Rat> parse_ratfunc(const std::string& s) {
    auto bar = fraction_bar(s);
    if (!bar) return RatFunc<Rat>(parse_poly(strip_outer(s)));
    Poly<Rat> num = parse_poly(strip_outer(s.substr(0, *bar)));
    Poly<Rat> den = parse_poly(strip_outer(s.substr(*bar + 1)));
    if (den.is_zero()) throw ParseError("zero denominator in '" + s + "'");
    return RatFunc<Rat>(std::move(num), std::move(den));
}

ProjPoint<Rat> parse_point(const std::string& s) {
    std::string t = strip_outer(s);
    if (t == "inf" || t == "oo" || t == "infinity") return ProjPoint<Rat>::infinity(Rat());
    return ProjPoint<Rat>(Rat::parse(t));
}

std::string print_poly(const Poly<Rat>& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int i = p.degree(); i >= 0; --i) {
        Rat c = p.coeff(i);
        if (c.is_zero()) continue;
        if (out.empty()) {
            if (c.sign() < 0) out += "-";
        } else {
            out += c.sign() < 0 ? "-" : "+";
        }
        Rat a = c.abs();
        if (i == 0) {
            out += a.to_string();
        } else {
            if (!a.is_one()) out += a.to_string();
            out += "x";
            if (i >= 2) out += "^" + std::to_string(i);
        }
    }
    return out;
}

std::string print_ratfunc(const RatFunc<Rat>& f) {
    auto [n, m] = integer_pair_representative(f);
    if (m.degree() == 0 && m.leading().is_one()) return print_poly(n);
    return "(" + print_poly(n) + ") / (" + print_poly(m) + ")";
}

std::string print_point(const ProjPoint<Rat>& p) {
    return p.is_infinity() ? "inf" : p.value().to_string();
}

std::string print_point(const ProjPoint<QuadExt>& p) {
    return p.is_infinity() ? "inf" : p.value().to_string();
}

std::optional<RatFunc<Rat>> try_rational(const RatFunc<QuadExt>& f) {
    for (const QuadExt& c : f.num().coeffs())
        if (!c.is_rational()) return std::nullopt;
    for (const QuadExt& c : f.den().coeffs())
        if (!c.is_rational()) return std::nullopt;
    auto down = [](const QuadExt& c) { return c.rational_value(); };
    return RatFunc<Rat>(map_poly<Rat>(f.num(), down), map_poly<Rat>(f.den(), down));
}

std::string print_ratfunc_quadext(const RatFunc<QuadExt>& f) {
    if (auto q = try_rational(f)) return print_ratfunc(*q);
    return f.to_string();
}

}  // namespace cubiq
