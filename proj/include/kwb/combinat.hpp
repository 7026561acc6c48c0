#pragma once

// Exact combinatorial scalars: factorials, binomials, multinomials,
// the odd double factorial, and Bernoulli numbers.

#include <kwb/rational.hpp>

#include <vector>

namespace kwb {

Integer factorial(unsigned n);
Integer binomial(const Integer& n, unsigned k);
Integer int_pow(const Integer& base, unsigned e);

// multinomial(top; parts) = top! / (p_1! ... p_m! (top - sum p_i)!).
// Requires sum p_i <= top; the leftover slot absorbs the difference, so
// implicit zero parts never change the value.
Integer multinomial(unsigned top, const std::vector<unsigned>& parts);

// (2l)!! in the odd-product convention: (2l)! / (2^l l!) = 1*3*5*...*(2l-1).
Integer odd_double_factorial(unsigned l);

// Bernoulli numbers in the convention B_1 = -1/2, defined by the recurrence
// sum_{k=0..m} binom(m+1, k) B_k = 0 for m >= 1.  Memoized, thread-safe.
Rational bernoulli(unsigned m);

}  // namespace kwb
