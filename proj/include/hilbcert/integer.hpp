#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace hilbcert {

/// Arbitrary precision signed integer. Every count, coefficient and Pell
/// solution in the library is carried in this type.
using Integer = mpz_class;

Integer pow(const Integer &base, unsigned long exponent);

/// floor(sqrt(n)) for n >= 0.
Integer isqrt(const Integer &n);

bool is_perfect_square(const Integer &n);

Integer binomial(const Integer &n, unsigned long k);

/// Quotient rounded toward +infinity / -infinity. Divisor must be nonzero.
Integer ceil_div(const Integer &a, const Integer &b);
Integer floor_div(const Integer &a, const Integer &b);

std::string to_string(const Integer &n);

/// Parses an optionally signed decimal literal; throws ParameterError.
Integer parse_integer(std::string_view text);

/// Narrowing conversion for loop bounds and exponents; throws
/// ParameterError when the value does not fit.
long to_long(const Integer &n);

inline int sign(const Integer &n) { return sgn(n); }

} // namespace hilbcert

namespace hilbcert {

// Ring hooks used by the generic matrix code.
inline Integer zero_like(const Integer &) { return 0; }
inline Integer one_like(const Integer &) { return 1; }
inline bool same_ring(const Integer &, const Integer &) { return true; }
inline bool is_zero(const Integer &x) { return sgn(x) == 0; }

} // namespace hilbcert
