#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cubiq/integer.hpp"
#include "cubiq/rational.hpp"

namespace cubiq {

/// p-adic valuation of q; nullopt encodes +infinity (q = 0).
std::optional<long> ord_p(const Int& p, const Rat& q);

/// q * p^{-ord_p(q)}: the unit part of q, with numerator and denominator
/// coprime to p. q != 0.
Rat unit_part(const Int& p, const Rat& q);

/// Legendre symbol (a/p) in {-1, 0, +1}. p must be an odd prime.
int legendre_symbol(const Int& a, const Int& p);

/// Smallest r in [0, p) with r^2 = a (mod p), if any. Requires 0 <= a < p.
std::optional<Int> sqrt_mod_p(const Int& a, const Int& p);

/// Exact decision of squareness in Q_p: q = 0, or ord_p(q) even and the unit
/// part u satisfies (p odd) legendre(u mod p) = +1, (p = 2) u = 1 (mod 8).
bool is_square_in_qp(const Int& p, const Rat& q);

/// Truncated p-adic expansion p^valuation * (digits[0] + digits[1] p + ...),
/// digits least-significant first.
struct PAdicExpansion {
    Int prime;
    long valuation = 0;
    std::vector<unsigned long> digits;
    bool zero = false;

    Int unit_value() const;  // digits recombined as an integer
    std::string to_string() const;
};

/// Square root of q in Q_p by Hensel lifting, accurate to
/// r^2 = unit_part(q) (mod p^precision) after clearing the (even) valuation.
/// The smallest nonnegative lift is returned. Odd-valuation input is
/// rejected with DomainError; a non-square yields nullopt.
std::optional<PAdicExpansion> hensel_sqrt(const Int& p, const Rat& q, int precision);

/// A rational number viewed inside Q_p. All decisions are exact; digit
/// expansions are produced on demand only.
class PAdicRational {
public:
    PAdicRational(Int p, Rat value);

    const Int& prime() const { return p_; }
    const Rat& value() const { return v_; }

    std::optional<long> valuation() const { return ord_p(p_, v_); }
    bool is_square() const { return is_square_in_qp(p_, v_); }
    std::optional<PAdicExpansion> sqrt(int precision) const { return hensel_sqrt(p_, v_, precision); }

private:
    Int p_;
    Rat v_;
};

}  // namespace cubiq
