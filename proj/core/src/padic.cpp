#include "cubiq/padic.hpp"

#include <utility>

#include "cubiq/errors.hpp"

namespace cubiq {

std::optional<long> ord_p(const Int& p, const Rat& q) {
    require_prime(p);
    if (q.is_zero()) return std::nullopt;
    return ord_int(p, q.num()) - ord_int(p, q.den());
}

Rat unit_part(const Int& p, const Rat& q) {
    if (q.is_zero()) throw DomainError("unit_part(0)");
    Int n, d;
    long en = mpz_remove(n.get_mpz_t(), q.num().get_mpz_t(), p.get_mpz_t());
    long ed = mpz_remove(d.get_mpz_t(), q.den().get_mpz_t(), p.get_mpz_t());
    (void)en;
    (void)ed;
    return Rat(n, d);
}

int legendre_symbol(const Int& a, const Int& p) {
    if (p == 2) throw DomainError("legendre symbol needs an odd prime");
    require_prime(p);
    return mpz_legendre(a.get_mpz_t(), p.get_mpz_t());
}

namespace {

Int powmod(const Int& b, const Int& e, const Int& m) {
    Int r;
    mpz_powm(r.get_mpz_t(), b.get_mpz_t(), e.get_mpz_t(), m.get_mpz_t());
    return r;
}

Int invmod(const Int& a, const Int& m) {
    Int r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
        throw DomainError("non-invertible residue");
    return r;
}

}  // namespace

std::optional<Int> sqrt_mod_p(const Int& a, const Int& p) {
    require_prime(p);
    if (a < 0 || a >= p) throw DomainError("sqrt_mod_p needs 0 <= a < p");
    if (sgn(a) == 0) return Int(0);
    if (p == 2) return a;  // 0 and 1 are their own roots
    if (legendre_symbol(a, p) != 1) return std::nullopt;

    Int r;
    if (mpz_tstbit(p.get_mpz_t(), 1)) {  // p = 3 (mod 4)
        r = powmod(a, (p + 1) / 4, p);
    } else {
        // Tonelli-Shanks
        Int q = p - 1;
        unsigned long s = mpz_scan1(q.get_mpz_t(), 0);
        mpz_fdiv_q_2exp(q.get_mpz_t(), q.get_mpz_t(), s);
        Int n(2);
        while (mpz_legendre(n.get_mpz_t(), p.get_mpz_t()) != -1) ++n;
        Int c = powmod(n, q, p);
        Int t = powmod(a, q, p);
        r = powmod(a, (q + 1) / 2, p);
        unsigned long m = s;
        while (t != 1) {
            Int t2 = t;
            unsigned long i = 0;
            while (t2 != 1) {
                t2 = t2 * t2 % p;
                ++i;
            }
            Int b = c;
            for (unsigned long j = 0; j + i + 1 < m; ++j) b = b * b % p;
            m = i;
            c = b * b % p;
            t = t * c % p;
            r = r * b % p;
        }
    }
    return std::min(r, Int(p - r));
}

bool is_square_in_qp(const Int& p, const Rat& q) {
    require_prime(p);
    if (q.is_zero()) return true;
    auto v = ord_p(p, q);
    if (*v % 2 != 0) return false;
    Rat u = unit_part(p, q);
    if (p == 2) {
        Int r = u.num() * invmod(u.den(), Int(8)) % 8;
        if (r < 0) r += 8;
        return r == 1;
    }
    Int r = u.num() * invmod(u.den(), p) % p;
    if (r < 0) r += p;
    return legendre_symbol(r, p) == 1;
}

Int PAdicExpansion::unit_value() const {
    Int acc(0);
    for (auto it = digits.rbegin(); it != digits.rend(); ++it) acc = acc * prime + *it;
    return acc;
}

std::string PAdicExpansion::to_string() const {
    if (zero) return "0 (p=" + prime.get_str() + ")";
    std::string s = "p=" + prime.get_str() + " val=" + std::to_string(valuation) + " digits=[";
    for (size_t i = 0; i < digits.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(digits[i]);
    }
    return s + "]";
}

std::optional<PAdicExpansion> hensel_sqrt(const Int& p, const Rat& q, int precision) {
    require_prime(p);
    if (precision < 1) throw DomainError("precision must be positive");
    if (q.is_zero()) {
        PAdicExpansion e;
        e.prime = p;
        e.zero = true;
        e.digits.assign(static_cast<size_t>(precision), 0);
        return e;
    }
    long v = *ord_p(p, q);
    if (v % 2 != 0)
        throw DomainError("odd p-adic valuation " + std::to_string(v) +
                          ": input is not a square; test with is_square_in_qp first");
    if (!is_square_in_qp(p, q)) return std::nullopt;

    Rat u = unit_part(p, q);
    Int pN;
    mpz_pow_ui(pN.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(precision));
    Int target = u.num() * invmod(u.den(), pN) % pN;
    if (target < 0) target += pN;

    Int r;
    if (p == 2) {
        // Roots of x^2 = u exist for u = 1 (mod 8); lift one bit at a time.
        // Below 2^3 everything collapses: any odd r works.
        r = 1;
        Int pk(8);
        for (int k = 3; k < precision; ++k) {
            Int diff = (r * r - target) % (2 * pk);
            if (diff < 0) diff += 2 * pk;
            if (sgn(diff) != 0) r += pk / 2;  // add 2^{k-1}
            pk *= 2;
        }
        r %= pN;
        // For precision >= 2 the roots come in the quadruple
        // {r, 2^N - r, 2^{N-1} - r, 2^{N-1} + r}; pick the smallest.
        if (precision >= 2) {
            r %= pN / 2;
            r = std::min(r, Int(pN / 2 - r));
        }
    } else {
        auto r0 = sqrt_mod_p(target % p, p);
        // is_square_in_qp passed, so a mod-p root exists
        r = *r0;
        Int mod = p;
        while (mod < pN) {
            mod = mod * mod;
            if (mod > pN) mod = pN;
            Int den = (2 * r) % mod;
            r = (r - (r * r - target) % mod * invmod(den, mod)) % mod;
            if (r < 0) r += mod;
        }
        r %= pN;
        if (2 * r > pN) r = pN - r;  // smallest representative of +/-r
    }

    PAdicExpansion e;
    e.prime = p;
    e.valuation = v / 2;
    Int rest = r;
    for (int i = 0; i < precision; ++i) {
        Int digit = rest % p;
        e.digits.push_back(digit.get_ui());
        rest /= p;
    }
    return e;
}

PAdicRational::PAdicRational(Int p, Rat value) : p_(std::move(p)), v_(std::move(value)) {
    require_prime(p_);
}

}  // namespace cubiq
