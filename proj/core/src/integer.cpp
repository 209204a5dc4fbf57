#include "cubiq/integer.hpp"

#include <algorithm>
#include <cstdlib>

#include "cubiq/errors.hpp"

namespace cubiq {

bool is_probable_prime(const Int& n) {
    return mpz_probab_prime_p(n.get_mpz_t(), 32) != 0;
}

void require_prime(const Int& n) {
    if (n < 2 || !is_probable_prime(n))
        throw DomainError("expected a prime, got " + n.get_str());
}

namespace {

// Brent's cycle variant of Pollard's rho. n odd composite, not a prime power
// of a tiny prime (small factors are stripped by trial division first).
Int rho_factor(const Int& n) {
    for (unsigned long c = 1;; ++c) {
        Int x(2), y(2), d(1);
        Int diff;
        while (d == 1) {
            x = (x * x + c) % n;
            y = (y * y + c) % n;
            y = (y * y + c) % n;
            diff = x - y;
            if (sgn(diff) == 0) break;  // cycle without factor; bump c
            mpz_abs(diff.get_mpz_t(), diff.get_mpz_t());
            mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
        }
        if (d > 1 && d < n) return d;
    }
}

void factor_rec(const Int& n, std::vector<Int>& primes) {
    if (n == 1) return;
    if (is_probable_prime(n)) {
        primes.push_back(n);
        return;
    }
    if (mpz_perfect_square_p(n.get_mpz_t())) {
        Int r;
        mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
        factor_rec(r, primes);
        factor_rec(r, primes);
        return;
    }
    Int d = rho_factor(n);
    factor_rec(d, primes);
    factor_rec(n / d, primes);
}

}  // namespace

std::vector<std::pair<Int, int>> factorize(const Int& n) {
    if (sgn(n) == 0) throw DomainError("factorize(0)");
    Int m = abs(n);
    std::vector<Int> primes;
    for (long p : {2L, 3L, 5L, 7L, 11L, 13L}) {
        while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            primes.emplace_back(p);
            mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
        }
    }
    // wheeling over 17, 19, ... up to 10^4 before handing off to rho
    for (long p = 17; p <= 10000 && m > 1; p += 2) {
        if (Int(p) * p > m) break;
        while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            primes.emplace_back(p);
            mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
        }
    }
    if (m > 1) factor_rec(m, primes);
    std::sort(primes.begin(), primes.end());

    std::vector<std::pair<Int, int>> out;
    for (const Int& p : primes) {
        if (!out.empty() && out.back().first == p)
            ++out.back().second;
        else
            out.emplace_back(p, 1);
    }
    return out;
}

std::pair<Int, Int> squarefree_decompose(const Int& n) {
    if (sgn(n) == 0) throw DomainError("squarefree_decompose(0)");
    Int s(1), k(sgn(n) < 0 ? -1 : 1);
    for (const auto& [p, e] : factorize(n)) {
        for (int i = 0; i < e / 2; ++i) s *= p;
        if (e % 2) k *= p;
    }
    return {s, k};
}

std::vector<Int> divisors(const Int& n) {
    auto fac = factorize(n);
    std::vector<Int> out{Int(1)};
    for (const auto& [p, e] : fac) {
        size_t base = out.size();
        Int q(1);
        for (int i = 1; i <= e; ++i) {
            q *= p;
            for (size_t j = 0; j < base; ++j) out.push_back(out[j] * q);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

long ord_int(const Int& p, const Int& n) {
    if (sgn(n) == 0) throw DomainError("ord_int(0)");
    Int rest;
    return static_cast<long>(mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t()));
}

}  // namespace cubiq
