#include "cubiq/roots.hpp"

#include <algorithm>

#include "cubiq/errors.hpp"
#include "cubiq/qpoly.hpp"
#include "cubiq/text.hpp"

namespace cubiq {

std::vector<std::pair<Poly<Rat>, int>> squarefree_factors(const Poly<Rat>& p) {
    if (p.is_zero()) throw DomainError("squarefree decomposition of zero");
    std::vector<std::pair<Poly<Rat>, int>> out;
    if (p.degree() == 0) return out;

    // Yun's algorithm, characteristic zero.
    Poly<Rat> g = gcd_poly(p, p.derivative());
    Poly<Rat> w = p / g;
    int i = 1;
    while (w.degree() > 0) {
        Poly<Rat> y = gcd_poly(w, g);
        Poly<Rat> f = w / y;
        if (f.degree() > 0) out.emplace_back(integer_primitive(f), i);
        w = std::move(y);
        g = g / w;
        ++i;
    }
    return out;
}

namespace {

Rat eval_rat(const Poly<Rat>& p, const Rat& x) {
    return p.eval(x);
}

// Integer value of the integer-coefficient polynomial at n.
Int eval_int(const Poly<Rat>& p, const Int& n) {
    Int acc(0);
    for (int i = p.degree(); i >= 0; --i) acc = acc * n + p.coeff(i).num();
    return acc;
}

// Rational roots of a squarefree integer-primitive polynomial (each simple).
std::vector<Rat> simple_rational_roots(Poly<Rat> s) {
    std::vector<Rat> out;
    if (s.degree() < 1) return out;

    // z | s
    if (s.coeff(0).is_zero()) {
        out.emplace_back(0);
        std::vector<Rat> c(s.coeffs().begin() + 1, s.coeffs().end());
        s = Poly<Rat>(std::move(c));
        if (s.degree() < 1) return out;
    }
    if (s.degree() == 1) {
        out.push_back(-s.coeff(0) / s.coeff(1));
        return out;
    }

    const Int at_one = eval_int(s, Int(1));
    const Int at_minus_one = eval_int(s, Int(-1));
    if (sgn(at_one) == 0) out.emplace_back(1);
    if (sgn(at_minus_one) == 0) out.emplace_back(-1);

    auto divides = [](const Int& d, const Int& n) {
        return sgn(n) == 0 || (sgn(d) != 0 && mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0);
    };
    for (const Int& rn : divisors(s.coeff(0).num())) {
        for (const Int& sn : divisors(s.leading().num())) {
            Int g;
            mpz_gcd(g.get_mpz_t(), rn.get_mpz_t(), sn.get_mpz_t());
            if (g != 1) continue;
            for (int sign : {1, -1}) {
                Int num = sign * rn;
                if (rn == 1 && sn == 1) continue;  // +/-1 probed above
                // r/s is a root only if (r - s) | p(1) and (r + s) | p(-1)
                if (!divides(num - sn, at_one)) continue;
                if (!divides(num + sn, at_minus_one)) continue;
                Rat cand(num, sn);
                if (eval_rat(s, cand).is_zero()) out.push_back(cand);
            }
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// Roots of the monic quadratic z^2 + b z + c.
std::pair<QuadExt, QuadExt> quadratic_roots(const Rat& b, const Rat& c) {
    Rat half = Rat(Int(-1), Int(2)) * b;
    QuadExt s = sqrt_rat(half * half - c);
    return {QuadExt(half) - s, QuadExt(half) + s};
}

// Try to split a squarefree monic quartic with no rational roots into two
// monic rational quadratics via the resolvent cubic. Empty on failure
// (irreducible over Q).
std::vector<std::pair<Rat, Rat>> quartic_quadratic_split(const Poly<Rat>& q) {
    const Rat p = q.coeff(3), r = q.coeff(1), s0 = q.coeff(0), qq = q.coeff(2);
    // resolvent: y^3 - q y^2 + (p r - 4 s) y - (p^2 s - 4 q s + r^2)
    Poly<Rat> res{-(p * p * s0 - Rat(4) * qq * s0 + r * r), p * r - Rat(4) * s0, -qq, Rat(1)};
    for (const Rat& y0 : simple_rational_roots(integer_primitive(res))) {
        // a + c = p, a c = q - y0
        Rat disc = p * p - Rat(4) * (qq - y0);
        QuadExt root = sqrt_rat(disc);
        if (!root.is_rational()) continue;
        Rat a = (p + root.rational_value()) / Rat(2);
        Rat cc = p - a;
        Rat b, d;
        if (a != cc) {
            // a d + b c = r with b + d = y0
            b = (r - a * y0) / (cc - a);
            d = y0 - b;
        } else {
            if (a * y0 != r) continue;
            Rat disc2 = y0 * y0 - Rat(4) * s0;
            QuadExt root2 = sqrt_rat(disc2);
            if (!root2.is_rational()) continue;
            b = (y0 + root2.rational_value()) / Rat(2);
            d = y0 - b;
        }
        if (b * d == s0) return {{a, b}, {cc, d}};
    }
    return {};
}

void resolve_squarefree(const Poly<Rat>& factor, int mult,
                        std::vector<std::pair<QuadExt, int>>& out) {
    Poly<Rat> rest = factor;
    for (const Rat& r : simple_rational_roots(factor)) {
        out.emplace_back(QuadExt(r), mult);
        rest = rest / Poly<Rat>{-r, Rat(1)};
    }
    if (rest.degree() <= 0) return;
    Poly<Rat> m = rest.monic();
    if (m.degree() == 1) {
        out.emplace_back(QuadExt(-m.coeff(0)), mult);
        return;
    }
    if (m.degree() == 2) {
        auto [r1, r2] = quadratic_roots(m.coeff(1), m.coeff(0));
        out.emplace_back(r1, mult);
        out.emplace_back(r2, mult);
        return;
    }
    if (m.degree() == 4) {
        auto split = quartic_quadratic_split(m);
        if (!split.empty()) {
            for (const auto& [b, c] : split) {
                auto [r1, r2] = quadratic_roots(b, c);
                out.emplace_back(r1, mult);
                out.emplace_back(r2, mult);
            }
            return;
        }
    }
    throw UnresolvableFactor("irreducible factor of degree " + std::to_string(m.degree()) +
                             " over Q: " + print_poly(integer_primitive(m)));
}

}  // namespace

std::vector<std::pair<Rat, int>> rational_roots(const Poly<Rat>& p) {
    std::vector<std::pair<Rat, int>> out;
    for (const auto& [f, mult] : squarefree_factors(p))
        for (const Rat& r : simple_rational_roots(f)) out.emplace_back(r, mult);
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

std::vector<std::pair<QuadExt, int>> roots_over_quadratics(const Poly<Rat>& p) {
    std::vector<std::pair<QuadExt, int>> out;
    for (const auto& [f, mult] : squarefree_factors(p)) resolve_squarefree(f, mult, out);
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return field_compare(a.first, b.first) < 0;
    });
    return out;
}

}  // namespace cubiq
