#include "quiver/rational.hpp"

#include <cmath>
#include <stdexcept>

namespace quiver {

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  mpq_class value;
  if (value.set_str(text, 10) != 0) {
    throw std::invalid_argument("bad rational literal: '" + text + "'");
  }
  if (value.get_den() == 0) {
    throw std::invalid_argument("zero denominator in '" + text + "'");
  }
  value.canonicalize();
  return value;
}

Rational rational_from_double(double value) {
  if (!std::isfinite(value)) {
    throw std::invalid_argument("non-finite entry");
  }
  mpq_class q;
  mpq_set_d(q.get_mpq_t(), value);
  return q;
}

std::string rational_to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_str();
}

double rational_to_double(const Rational& value) { return value.get_d(); }

std::size_t rational_bit_length(const Rational& value) {
  std::size_t num_bits = mpz_sizeinbase(value.get_num().get_mpz_t(), 2);
  std::size_t den_bits = mpz_sizeinbase(value.get_den().get_mpz_t(), 2);
  return std::max<std::size_t>(1, std::max(num_bits, den_bits));
}

}  // namespace quiver
