#pragma once

#include <gmpxx.h>

#include <utility>
#include <vector>

namespace munits {

using Int = mpz_class;
using Rat = mpq_class;

// Canonicalized rational num/den (mpq_class(a,b) alone does not reduce).
Rat make_rat(const Int& num, const Int& den);
Rat make_rat(long long num, long long den);

// Prime factorization of n >= 1 as (prime, exponent) pairs, primes ascending.
// Results are memoized; safe to call from multiple threads.
std::vector<std::pair<Int, int>> factorize(const Int& n);

// Moebius function, n >= 1.
int mobius(const Int& n);

// All positive divisors of n >= 1, ascending.
std::vector<Int> divisors(const Int& n);

// Sum of divisors of n >= 1.
Int sigma1(const Int& n);

// Second Bernoulli polynomial x^2 - x + 1/6.
Rat bernoulli2(const Rat& x);

}  // namespace munits
