#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "quiver/quiver.hpp"
#include "quiver/representation.hpp"

namespace quiver {

// (W, sigma) with sigma . dim W = 0, validated on construction.
struct QuiverDatum {
  QuiverDatum(Representation representation, Weight weight);

  Representation rep;
  Weight sigma;
};

// The sigma_+/sigma_- split underlying the block-matrix family. Vertices
// keep the quiver's order; the interval sets I_j^- and I_i^+ partition [M]
// and [M'] at the cumulative-sum boundaries.
struct SigmaSplit {
  std::vector<std::string> positive;  // v_1..v_n
  std::vector<std::string> negative;  // w_1..w_m
  std::vector<long long> sigma_plus;
  std::vector<long long> sigma_minus;
  std::vector<long long> beta_positive;  // beta(v_i)
  std::vector<long long> beta_negative;  // beta(w_j)
  long long block_rows = 0;              // M
  long long block_cols = 0;              // M'
  long long matrix_size = 0;             // N
  // pos_cumulative[i] = sigma_+(v_1)+...+sigma_+(v_i); index 0 holds 0.
  std::vector<long long> pos_cumulative;
  std::vector<long long> neg_cumulative;
};

SigmaSplit split_weight(const QuiverDatum& d);

// One member of the family: the N x N matrix with W(p) in block (q, r) and
// zeros elsewhere. Only the block is stored; densify on demand.
struct FamilyEntry {
  std::size_t i;          // 1-based position in the positive vertex list
  std::size_t j;          // 1-based position in the negative vertex list
  std::size_t path_rank;  // 0-based rank of p within P_{i,j}
  Path path;
  long long q;  // 1-based, in I_j^-
  long long r;  // 1-based, in I_i^+
  RationalMatrix block;  // W(p), shape beta(w_j) x beta(v_i)
};

class BlockMatrixFamily {
 public:
  BlockMatrixFamily(SigmaSplit split, std::vector<FamilyEntry> entries);

  const SigmaSplit& split() const { return split_; }
  const std::vector<FamilyEntry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  long long matrix_size() const { return split_.matrix_size; }

  const std::vector<long long>& row_heights() const { return row_heights_; }
  const std::vector<long long>& col_widths() const { return col_widths_; }
  long long row_offset(long long q) const { return row_offsets_[q - 1]; }
  long long col_offset(long long r) const { return col_offsets_[r - 1]; }

  /// Dense N x N matrix of entry k.
  RationalMatrix dense(std::size_t k) const;

  /// Dense sum of coeffs[k] * entry k; coeffs.size() must equal size().
  RationalMatrix combine(const std::vector<Rational>& coeffs) const;
  RationalMatrix combine(const std::vector<long long>& coeffs) const;

  /// Largest bit length over all block entries (the b in iteration bounds).
  std::size_t max_entry_bits() const;

 private:
  SigmaSplit split_;
  std::vector<FamilyEntry> entries_;
  std::vector<long long> row_heights_;  // per q = 1..M
  std::vector<long long> col_widths_;   // per r = 1..M'
  std::vector<long long> row_offsets_;
  std::vector<long long> col_offsets_;
};

/// Enumerates I_sigma in (i, j, path, q, r) order; bit-reproducible.
BlockMatrixFamily build_block_matrices(const QuiverDatum& d);

// Q^sigma with one arrow a_p per oriented path p from a positive to a
// negative vertex, carrying W^sigma(a_p) = W(p).
struct BipartiteReduction {
  QuiverPtr quiver;       // Q^sigma
  Representation rep;     // W^sigma
  Weight sigma;           // restricted to Q^sigma's vertices
  std::vector<Path> origin_paths;  // per Q^sigma arrow, the path in Q

  QuiverDatum datum() const { return QuiverDatum(rep, sigma); }
};

BipartiteReduction build_bipartite(const QuiverDatum& d);

// Block array f: blocks[j][i] is a sigma_-(w_j) x sigma_+(v_i) grid of
// path combinations from v_i to w_j.
struct SchofieldArray {
  // blocks[j][i][s][t], s < sigma_-(w_j), t < sigma_+(v_i)
  std::vector<std::vector<std::vector<std::vector<LinearCombination>>>> blocks;
};

struct SchofieldResult {
  RationalMatrix matrix;  // W^f
  Rational value;         // c^f(W) = det(W^f)
};

/// Substitutes W into f and takes the exact determinant. ShapeError when the
/// grid shapes disagree with split_weight(d) or a combination is not a
/// parallel family from v_i to w_j.
SchofieldResult schofield_matrix(const QuiverDatum& d,
                                 const SchofieldArray& f);

}  // namespace quiver
