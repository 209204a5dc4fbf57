#pragma once

#include <utility>

#include "cubiq/integer.hpp"
#include "cubiq/poly.hpp"
#include "cubiq/primefield.hpp"
#include "cubiq/ratfunc.hpp"
#include "cubiq/rational.hpp"

namespace cubiq {

/// Scale p to integer coefficients with content 1; sign of the leading
/// coefficient is preserved. p != 0.
Poly<Rat> integer_primitive(const Poly<Rat>& p);

/// The integer-cleared coprime representative of f: both parts have integer
/// coefficients, their joint content is 1, and the leading coefficient of
/// the denominator is positive. This is the deterministic display form and
/// the representative Wronskians are computed from.
std::pair<Poly<Rat>, Poly<Rat>> integer_pair_representative(const RatFunc<Rat>& f);

/// num' den - num den' of the integer-cleared representative (content kept).
Poly<Rat> wronskian(const RatFunc<Rat>& f);

/// p evaluated at the integer n, exact.
Rat eval_at_int(const Poly<Rat>& p, long n);

/// Reduction of f modulo p: clear denominators to joint integer content 1,
/// reduce the coefficients, then remove any common polynomial factor mod p.
/// Degenerate reductions (the whole denominator vanishing mod p) throw.
RatFunc<Fp> reduce_mod_p(const RatFunc<Rat>& f, long long p);

}  // namespace cubiq
