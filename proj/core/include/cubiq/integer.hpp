#pragma once

#include <gmpxx.h>

#include <utility>
#include <vector>

namespace cubiq {

using Int = mpz_class;

bool is_probable_prime(const Int& n);

// Requires n prime; throws DomainError otherwise.
void require_prime(const Int& n);

// Prime factorization of |n|, n != 0: pairs (prime, exponent), primes ascending.
std::vector<std::pair<Int, int>> factorize(const Int& n);

// n = s^2 * k with k squarefree, s > 0. The sign of n stays on k. n != 0.
std::pair<Int, Int> squarefree_decompose(const Int& n);

// All positive divisors of |n|, ascending. n != 0.
std::vector<Int> divisors(const Int& n);

// Exponent of the prime p in n. n != 0.
long ord_int(const Int& p, const Int& n);

}  // namespace cubiq
