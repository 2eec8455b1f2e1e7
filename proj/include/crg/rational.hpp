#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace crg {

using Integer = mpz_class;
/// Exact rational; gmpxx keeps it canonical (denominator > 0, reduced).
using Rational = mpq_class;

/// Builds num/den in canonical form. Throws DomainError when den == 0.
Rational make_rational(const Integer& num, const Integer& den);

/// m! for m >= 0.
Integer factorial(unsigned long m);

/// m!! for m >= -1, with 0!! = (-1)!! = 1.
Integer double_factorial(long m);

Integer binomial(unsigned long n, unsigned long k);

/// Exact Bernoulli number B_m for even m >= 2; odd m and m < 2 are rejected.
Rational bernoulli(unsigned m);

/// B_0..B_m with the B_1 = -1/2 convention (cached, thread-safe).
std::vector<Rational> bernoulli_numbers(unsigned m);

/// Bernoulli polynomial B_k(x).
Rational bernoulli_polynomial(unsigned k, const Rational& x);

/// Integer power base^e, e >= 0.
Integer ipow(const Integer& base, unsigned long e);

std::string to_string(const Rational& q);

} // namespace crg
