#include "quiver/rational_matrix.hpp"

#include <stdexcept>
#include <utility>

namespace quiver {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::from_rows(
    std::initializer_list<std::initializer_list<Rational>> rows) {
  std::vector<std::vector<Rational>> copy;
  for (const auto& row : rows) copy.emplace_back(row);
  return from_rows(copy);
}

RationalMatrix RationalMatrix::from_rows(
    const std::vector<std::vector<Rational>>& rows) {
  std::size_t r = rows.size();
  std::size_t c = r == 0 ? 0 : rows.front().size();
  RationalMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) {
      throw std::invalid_argument("ragged matrix rows");
    }
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

bool RationalMatrix::is_zero() const {
  for (const auto& v : data_) {
    if (v != 0) return false;
  }
  return true;
}

RationalMatrix RationalMatrix::transposed() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  }
  return t;
}

void RationalMatrix::accumulate_block(const RationalMatrix& block,
                                      std::size_t r0, std::size_t c0,
                                      const Rational& scale) {
  if (r0 + block.rows() > rows_ || c0 + block.cols() > cols_) {
    throw std::out_of_range("block exceeds matrix bounds");
  }
  for (std::size_t i = 0; i < block.rows(); ++i) {
    for (std::size_t j = 0; j < block.cols(); ++j) {
      at(r0 + i, c0 + j) += scale * block.at(i, j);
    }
  }
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols() != b.rows()) {
    throw std::invalid_argument("matrix product shape mismatch");
  }
  RationalMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rational& aik = a.at(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        c.at(i, j) += aik * b.at(k, j);
      }
    }
  }
  return c;
}

RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("matrix sum shape mismatch");
  }
  RationalMatrix c = a;
  for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] += b.data_[i];
  return c;
}

RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("matrix difference shape mismatch");
  }
  RationalMatrix c = a;
  for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] -= b.data_[i];
  return c;
}

RationalMatrix operator*(const Rational& s, const RationalMatrix& a) {
  RationalMatrix c = a;
  for (auto& v : c.data_) v *= s;
  return c;
}

bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

namespace {

// Clears denominators row by row; returns the integer matrix and the product
// of the row multipliers (so det(input) = det(integer)/multiplier_product).
std::vector<std::vector<Integer>> to_integer_rows(const RationalMatrix& m,
                                                  Integer* multiplier_product) {
  std::vector<std::vector<Integer>> rows(m.rows(),
                                         std::vector<Integer>(m.cols()));
  Integer product = 1;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Integer lcm = 1;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(),
              m.at(i, j).get_den().get_mpz_t());
    }
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Rational& v = m.at(i, j);
      rows[i][j] = v.get_num() * (lcm / v.get_den());
    }
    product *= lcm;
  }
  if (multiplier_product) *multiplier_product = product;
  return rows;
}

}  // namespace

Rational determinant(const RationalMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("determinant of non-square");
  std::size_t n = m.rows();
  if (n == 0) return 1;  // empty-determinant convention

  Integer row_multipliers;
  auto a = to_integer_rows(m, &row_multipliers);

  // Bareiss fraction-free elimination.
  int sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t pivot = k + 1;
      while (pivot < n && a[pivot][k] == 0) ++pivot;
      if (pivot == n) return 0;
      std::swap(a[k], a[pivot]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  Integer num = a[n - 1][n - 1];
  if (sign < 0) num = -num;
  Rational det(num, row_multipliers);
  det.canonicalize();
  return det;
}

std::size_t exact_rank(const RationalMatrix& m) {
  std::size_t rows = m.rows(), cols = m.cols();
  if (rows == 0 || cols == 0) return 0;
  auto a = to_integer_rows(m, nullptr);

  std::size_t rank = 0;
  Integer prev = 1;
  std::size_t col = 0;
  for (std::size_t row = 0; row < rows && col < cols; ++col) {
    std::size_t pivot = row;
    while (pivot < rows && a[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[row], a[pivot]);
    for (std::size_t i = row + 1; i < rows; ++i) {
      for (std::size_t j = col + 1; j < cols; ++j) {
        Integer t = a[i][j] * a[row][col] - a[i][col] * a[row][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][col] = 0;
    }
    prev = a[row][col];
    ++rank;
    ++row;
  }
  return rank;
}

std::optional<RationalMatrix> inverse(const RationalMatrix& m) {
  if (!m.is_square()) return std::nullopt;
  std::size_t n = m.rows();
  RationalMatrix a = m;
  RationalMatrix inv = RationalMatrix::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a.at(pivot, col) == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) {
        swap(a.at(col, j), a.at(pivot, j));
        swap(inv.at(col, j), inv.at(pivot, j));
      }
    }
    Rational p = a.at(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      a.at(col, j) /= p;
      inv.at(col, j) /= p;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col) continue;
      Rational f = a.at(i, col);
      if (f == 0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        a.at(i, j) -= f * a.at(col, j);
        inv.at(i, j) -= f * inv.at(col, j);
      }
    }
  }
  return inv;
}

std::size_t max_entry_bit_length(const RationalMatrix& m) {
  std::size_t bits = 1;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      bits = std::max(bits, rational_bit_length(m.at(i, j)));
    }
  }
  return bits;
}

}  // namespace quiver
