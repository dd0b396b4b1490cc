#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace repmatch {

// All combinatorial quantities (dimensions, multiplicities, aggregates) are
// kept exact. Dimensions grow like n^(d(d-1)/2) and multiplicities like d^n,
// so 64-bit arithmetic overflows well inside the supported grid.
using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// ceil(log2(x)) for x >= 1: the number of binary digits of x - 1.
int ceil_log2(const BigInt& x);

BigInt factorial(int n);
BigInt binomial(int n, int k);
BigInt pow_int(const BigInt& base, int exp);

// "p/q" (or "p" when q == 1), numerator carrying the sign.
std::string rational_string(const BigRat& v);

// Decimal rendering with `digits` significant digits; plain notation for
// moderate exponents, scientific otherwise. Locale-independent, '.' separator.
std::string to_decimal(const BigRat& v, int digits = 12);

}  // namespace repmatch
