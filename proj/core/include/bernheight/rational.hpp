#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace bernheight {

/// Exact rational scalar used throughout the library (GMP, always canonical).
using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(std::int64_t num, std::int64_t den = 1);
Integer make_integer(std::int64_t value);

/// Largest integer not exceeding q.
Integer floor_of(const Rational& q);

/// Fractional part in [0, 1).
Rational frac(const Rational& q);

/// Representative of q modulo 1 in [-1/2, 1/2).
Rational centered_mod1(const Rational& q);

/// Converts an Integer that is known to fit; throws std::overflow_error otherwise.
std::int64_t to_int64(const Integer& z);

double to_double(const Rational& q);

/// Always "p/q", including "n/1" for integers.
std::string to_string(const Rational& q);

/// Accepts "p/q", "p", and optional leading sign; throws std::invalid_argument.
Rational parse_rational(std::string_view text);

}  // namespace bernheight
