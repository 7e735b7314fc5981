#include "quiver/datum.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace quiver {

QuiverDatum::QuiverDatum(Representation representation, Weight weight)
    : rep(std::move(representation)), sigma(std::move(weight)) {
  if (sigma.size() != rep.dims().size()) {
    throw WeightDimensionMismatch("weight length != vertex count");
  }
  if (sigma.dot(rep.dims()) != 0) {
    throw WeightDimensionMismatch("weight-dimension pairing nonzero");
  }
}

SigmaSplit split_weight(const QuiverDatum& d) {
  const Quiver& q = d.rep.quiver();
  const DimensionVector& beta = d.rep.dims();

  SigmaSplit s;
  s.pos_cumulative.push_back(0);
  s.neg_cumulative.push_back(0);
  for (std::size_t x = 0; x < q.num_vertices(); ++x) {
    long long w = d.sigma[x];
    if (w > 0) {
      s.positive.push_back(q.vertices()[x]);
      s.sigma_plus.push_back(w);
      s.beta_positive.push_back(beta[x]);
      s.pos_cumulative.push_back(s.pos_cumulative.back() + w);
    } else if (w < 0) {
      s.negative.push_back(q.vertices()[x]);
      s.sigma_minus.push_back(-w);
      s.beta_negative.push_back(beta[x]);
      s.neg_cumulative.push_back(s.neg_cumulative.back() - w);
    }
  }
  s.block_cols = s.pos_cumulative.back();   // M'
  s.block_rows = s.neg_cumulative.back();   // M

  long long n_cols = 0, n_rows = 0;
  for (std::size_t i = 0; i < s.positive.size(); ++i) {
    n_cols += s.sigma_plus[i] * s.beta_positive[i];
  }
  for (std::size_t j = 0; j < s.negative.size(); ++j) {
    n_rows += s.sigma_minus[j] * s.beta_negative[j];
  }
  if (n_cols != n_rows) {
    // Unreachable when sigma.beta = 0; kept as a consistency check.
    throw std::logic_error("block size sums disagree");
  }
  s.matrix_size = n_cols;
  return s;
}

BlockMatrixFamily::BlockMatrixFamily(SigmaSplit split,
                                     std::vector<FamilyEntry> entries)
    : split_(std::move(split)), entries_(std::move(entries)) {
  // Block row q has the height of beta(w_j) for the j with q in I_j^-.
  for (std::size_t j = 0; j < split_.negative.size(); ++j) {
    for (long long k = 0; k < split_.sigma_minus[j]; ++k) {
      row_heights_.push_back(split_.beta_negative[j]);
    }
  }
  for (std::size_t i = 0; i < split_.positive.size(); ++i) {
    for (long long k = 0; k < split_.sigma_plus[i]; ++k) {
      col_widths_.push_back(split_.beta_positive[i]);
    }
  }
  long long acc = 0;
  for (long long h : row_heights_) {
    row_offsets_.push_back(acc);
    acc += h;
  }
  if (acc != split_.matrix_size) throw std::logic_error("row layout != N");
  acc = 0;
  for (long long w : col_widths_) {
    col_offsets_.push_back(acc);
    acc += w;
  }
  if (acc != split_.matrix_size) throw std::logic_error("column layout != N");
}

RationalMatrix BlockMatrixFamily::dense(std::size_t k) const {
  const FamilyEntry& e = entries_[k];
  RationalMatrix m((std::size_t)split_.matrix_size,
                   (std::size_t)split_.matrix_size);
  m.accumulate_block(e.block, (std::size_t)row_offset(e.q),
                     (std::size_t)col_offset(e.r), 1);
  return m;
}

RationalMatrix BlockMatrixFamily::combine(
    const std::vector<Rational>& coeffs) const {
  if (coeffs.size() != entries_.size()) {
    throw DimensionMismatch("coefficient count != family size");
  }
  RationalMatrix m((std::size_t)split_.matrix_size,
                   (std::size_t)split_.matrix_size);
  for (std::size_t k = 0; k < entries_.size(); ++k) {
    if (coeffs[k] == 0) continue;
    const FamilyEntry& e = entries_[k];
    m.accumulate_block(e.block, (std::size_t)row_offset(e.q),
                       (std::size_t)col_offset(e.r), coeffs[k]);
  }
  return m;
}

RationalMatrix BlockMatrixFamily::combine(
    const std::vector<long long>& coeffs) const {
  std::vector<Rational> rational(coeffs.begin(), coeffs.end());
  return combine(rational);
}

std::size_t BlockMatrixFamily::max_entry_bits() const {
  std::size_t bits = 1;
  for (const auto& e : entries_) {
    bits = std::max(bits, max_entry_bit_length(e.block));
  }
  return bits;
}

BlockMatrixFamily build_block_matrices(const QuiverDatum& d) {
  SigmaSplit split = split_weight(d);
  const Quiver& q = d.rep.quiver();

  std::vector<FamilyEntry> entries;
  long long expected = 0;
  for (std::size_t i = 0; i < split.positive.size(); ++i) {
    for (std::size_t j = 0; j < split.negative.size(); ++j) {
      auto paths = enumerate_paths(q, split.positive[i], split.negative[j]);
      expected += (long long)paths.size() * split.sigma_minus[j] *
                  split.sigma_plus[i];
      for (std::size_t p = 0; p < paths.size(); ++p) {
        RationalMatrix block = evaluate_path(d.rep, paths[p]);
        for (long long qq = split.neg_cumulative[j] + 1;
             qq <= split.neg_cumulative[j + 1]; ++qq) {
          for (long long rr = split.pos_cumulative[i] + 1;
               rr <= split.pos_cumulative[i + 1]; ++rr) {
            entries.push_back(
                {i + 1, j + 1, p, paths[p], qq, rr, block});
          }
        }
      }
    }
  }
  if ((long long)entries.size() != expected) {
    throw std::logic_error("family size formula mismatch");
  }
  return BlockMatrixFamily(std::move(split), std::move(entries));
}

namespace {

std::string padded_rank(std::size_t rank, std::size_t width) {
  std::string digits = std::to_string(rank);
  if (digits.size() < width) {
    digits.insert(digits.begin(), width - digits.size(), '0');
  }
  return digits;
}

std::string joined_arrow_ids(const Path& p) {
  std::string out;
  for (std::size_t k = 0; k < p.arrows().size(); ++k) {
    if (k) out += '.';
    out += p.arrows()[k];
  }
  return out;
}

}  // namespace

BipartiteReduction build_bipartite(const QuiverDatum& d) {
  SigmaSplit split = split_weight(d);
  const Quiver& q = d.rep.quiver();

  // One pass to know the arrow count (fixes the zero-padding width), one to
  // mint the arrows. The zero-padded global rank makes ids unique and keeps
  // lexicographic id order equal to the (i, j, path) enumeration order, which
  // is what makes the reduced family bit-identical to the original.
  std::vector<std::pair<std::pair<std::size_t, std::size_t>, Path>> found;
  for (std::size_t i = 0; i < split.positive.size(); ++i) {
    for (std::size_t j = 0; j < split.negative.size(); ++j) {
      for (auto& p : enumerate_paths(q, split.positive[i], split.negative[j])) {
        found.push_back({{i, j}, std::move(p)});
      }
    }
  }
  std::size_t width = std::max<std::size_t>(
      4, std::to_string(found.empty() ? 0 : found.size() - 1).size());

  std::vector<std::string> vertices = split.positive;
  vertices.insert(vertices.end(), split.negative.begin(),
                  split.negative.end());

  std::vector<Arrow> arrows;
  std::vector<Path> origin_paths;
  std::map<std::string, RationalMatrix> matrices;
  for (std::size_t rank = 0; rank < found.size(); ++rank) {
    const auto& [ij, path] = found[rank];
    std::string id =
        "p" + padded_rank(rank, width) + ":" + joined_arrow_ids(path);
    arrows.push_back({id, split.positive[ij.first], split.negative[ij.second]});
    matrices.emplace(id, evaluate_path(d.rep, path));
    origin_paths.push_back(path);
  }

  auto bq = std::make_shared<const Quiver>(std::move(vertices),
                                           std::move(arrows));
  std::vector<long long> beta_values, sigma_values;
  for (const auto& v : bq->vertices()) {
    std::size_t x = q.vertex_index(v);
    beta_values.push_back(d.rep.dims()[x]);
    sigma_values.push_back(d.sigma[x]);
  }
  Representation rep(bq, DimensionVector::from_values(beta_values), matrices);
  return BipartiteReduction{bq, std::move(rep),
                            Weight::from_values(sigma_values),
                            std::move(origin_paths)};
}

SchofieldResult schofield_matrix(const QuiverDatum& d,
                                 const SchofieldArray& f) {
  SigmaSplit split = split_weight(d);
  std::size_t m = split.negative.size(), n = split.positive.size();
  if (f.blocks.size() != m) {
    throw ShapeError("Schofield array must have one block row per negative "
                     "vertex");
  }

  // Offsets of block row q and block column r in the assembled matrix.
  std::vector<long long> row_offsets, col_offsets;
  {
    long long acc = 0;
    for (std::size_t j = 0; j < m; ++j) {
      for (long long k = 0; k < split.sigma_minus[j]; ++k) {
        row_offsets.push_back(acc);
        acc += split.beta_negative[j];
      }
    }
    acc = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (long long k = 0; k < split.sigma_plus[i]; ++k) {
        col_offsets.push_back(acc);
        acc += split.beta_positive[i];
      }
    }
  }

  RationalMatrix result((std::size_t)split.matrix_size,
                        (std::size_t)split.matrix_size);
  for (std::size_t j = 0; j < m; ++j) {
    if (f.blocks[j].size() != n) {
      throw ShapeError("Schofield block row " + std::to_string(j + 1) +
                       " must have one block per positive vertex");
    }
    for (std::size_t i = 0; i < n; ++i) {
      const auto& grid = f.blocks[j][i];
      if ((long long)grid.size() != split.sigma_minus[j]) {
        throw ShapeError("Schofield block (" + std::to_string(j + 1) + "," +
                         std::to_string(i + 1) + ") must have sigma_-(w_j) rows");
      }
      for (std::size_t s = 0; s < grid.size(); ++s) {
        if ((long long)grid[s].size() != split.sigma_plus[i]) {
          throw ShapeError("Schofield block (" + std::to_string(j + 1) + "," +
                           std::to_string(i + 1) +
                           ") must have sigma_+(v_i) columns");
        }
        for (std::size_t t = 0; t < grid[s].size(); ++t) {
          const LinearCombination& combo = grid[s][t];
          if (!combo.empty() && (combo.source() != split.positive[i] ||
                                 combo.target() != split.negative[j])) {
            throw ShapeError("combination endpoints must be v_i -> w_j");
          }
          for (const auto& term : combo.terms()) {
            if (term.path.length() < 1) {
              throw ShapeError("trivial path in Schofield entry");
            }
          }
          RationalMatrix value = evaluate_combination(
              d.rep, combo, split.positive[i], split.negative[j]);
          long long qq = split.neg_cumulative[j] + (long long)s;  // 0-based
          long long rr = split.pos_cumulative[i] + (long long)t;
          result.accumulate_block(value, (std::size_t)row_offsets[qq],
                                  (std::size_t)col_offsets[rr], 1);
        }
      }
    }
  }
  Rational det = determinant(result);
  return SchofieldResult{std::move(result), std::move(det)};
}

}  // namespace quiver
