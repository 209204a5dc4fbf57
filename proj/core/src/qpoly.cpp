#include "cubiq/qpoly.hpp"

#include "cubiq/errors.hpp"

namespace cubiq {

namespace {

Int denominator_lcm(const Poly<Rat>& p, Int acc) {
    for (const Rat& c : p.coeffs()) {
        Int d = c.den();
        mpz_lcm(acc.get_mpz_t(), acc.get_mpz_t(), d.get_mpz_t());
    }
    return acc;
}

Int coefficient_gcd(const Poly<Rat>& p, Int acc) {
    for (const Rat& c : p.coeffs()) {
        Int n = c.num();
        mpz_gcd(acc.get_mpz_t(), acc.get_mpz_t(), n.get_mpz_t());
    }
    return acc;
}

}  // namespace

Poly<Rat> integer_primitive(const Poly<Rat>& p) {
    if (p.is_zero()) throw DomainError("integer_primitive of zero polynomial");
    Int l = denominator_lcm(p, Int(1));
    Poly<Rat> q = p.scaled(Rat(l));
    Int g = coefficient_gcd(q, Int(0));
    return q.scaled(Rat(Int(1), g));
}

std::pair<Poly<Rat>, Poly<Rat>> integer_pair_representative(const RatFunc<Rat>& f) {
    Int l = denominator_lcm(f.num(), denominator_lcm(f.den(), Int(1)));
    Poly<Rat> n = f.num().scaled(Rat(l));
    Poly<Rat> m = f.den().scaled(Rat(l));
    Int g = m.is_zero() ? Int(0) : coefficient_gcd(m, Int(0));
    if (!n.is_zero()) g = coefficient_gcd(n, g);
    Rat scale(Int(1), g);
    if (m.leading().sign() < 0) scale = -scale;
    return {n.scaled(scale), m.scaled(scale)};
}

Poly<Rat> wronskian(const RatFunc<Rat>& f) {
    auto [n, m] = integer_pair_representative(f);
    return wronskian_of_pair(n, m);
}

Rat eval_at_int(const Poly<Rat>& p, long n) {
    return p.eval(Rat(n));
}

namespace {

Poly<Fp> reduce_poly(const Poly<Rat>& p, long long prime) {
    std::vector<Fp> c;
    c.reserve(p.coeffs().size());
    for (const Rat& x : p.coeffs()) {
        Int r = x.num() % prime;
        c.emplace_back(r.get_si(), prime);
    }
    return Poly<Fp>(std::move(c));
}

}  // namespace

RatFunc<Fp> reduce_mod_p(const RatFunc<Rat>& f, long long p) {
    auto [n, m] = integer_pair_representative(f);
    Poly<Fp> nbar = reduce_poly(n, p);
    Poly<Fp> mbar = reduce_poly(m, p);
    if (mbar.is_zero()) {
        if (nbar.is_zero()) throw DomainError("reduction mod " + std::to_string(p) + " vanishes");
        throw DomainError("denominator vanishes mod " + std::to_string(p));
    }
    return RatFunc<Fp>(std::move(nbar), std::move(mbar));  // ctor clears common factors
}

}  // namespace cubiq

