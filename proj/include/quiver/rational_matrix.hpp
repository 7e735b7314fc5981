#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <vector>

#include "quiver/rational.hpp"

namespace quiver {

// Dense exact-rational matrix, row-major. 0xk and kx0 shapes are legal; the
// 0x0 determinant is 1 by convention (empty product), which the span oracles
// depend on.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);

  static RationalMatrix identity(std::size_t n);
  static RationalMatrix from_rows(
      std::initializer_list<std::initializer_list<Rational>> rows);
  static RationalMatrix from_rows(
      const std::vector<std::vector<Rational>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& at(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }

  RationalMatrix transposed() const;

  /// this += scale * block, with block's top-left corner at (r0, c0).
  void accumulate_block(const RationalMatrix& block, std::size_t r0,
                        std::size_t c0, const Rational& scale);

  friend RationalMatrix operator*(const RationalMatrix& a,
                                  const RationalMatrix& b);
  friend RationalMatrix operator+(const RationalMatrix& a,
                                  const RationalMatrix& b);
  friend RationalMatrix operator-(const RationalMatrix& a,
                                  const RationalMatrix& b);
  friend RationalMatrix operator*(const Rational& s, const RationalMatrix& a);
  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Exact determinant: row denominators are cleared, then fraction-free
/// (Bareiss) elimination over integers. det of the 0x0 matrix is 1.
Rational determinant(const RationalMatrix& m);

/// Exact rank via fraction-free elimination with full pivot search.
std::size_t exact_rank(const RationalMatrix& m);

/// Gauss-Jordan inverse; nullopt when singular (or not square).
std::optional<RationalMatrix> inverse(const RationalMatrix& m);

/// Largest rational_bit_length over all entries; >= 1 even for empty shapes.
std::size_t max_entry_bit_length(const RationalMatrix& m);

}  // namespace quiver
