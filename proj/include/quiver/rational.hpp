#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <string>

namespace quiver {

// All exact arithmetic in the library runs on GMP rationals. mpq_class keeps
// entries canonical (gcd-reduced, positive denominator), which the serializers
// and the bit-for-bit reproducibility contracts rely on.
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p", "-p" or "p/q" (whitespace-free). Throws std::invalid_argument.
Rational parse_rational(const std::string& text);

/// Exact conversion; every double is a dyadic rational.
Rational rational_from_double(double value);

/// Canonical form: "p" when the denominator is 1, else "p/q" with q > 0.
std::string rational_to_string(const Rational& value);

double rational_to_double(const Rational& value);

/// Bits of the larger of |numerator| and denominator; >= 1.
std::size_t rational_bit_length(const Rational& value);

}  // namespace quiver
