#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>

namespace cb {

using Q = mpq_class;
using Z = mpz_class;

std::string to_string(const Q& x);
std::string to_string(const Z& x);

// Accepts "p", "p/q", "-p/q" with optional surrounding spaces.
Q parse_rational(const std::string& text);

// Generalized binomial coefficient top*(top-1)*...*(top-k+1)/k!, zero for k<0.
Q binom(const Q& top, long k);
Q binom(long top, long k);
Q factorial(long n);
// Canonical a/b.
Q ratio(long a, long b);
Q power(const Q& base, long e);

std::size_t bit_length(const Z& x);

inline int sign_pow(long e) { return (e % 2 == 0) ? 1 : -1; }

}  // namespace cb
