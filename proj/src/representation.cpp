#include "quiver/representation.hpp"

#include <utility>

namespace quiver {

Representation::Representation(
    QuiverPtr q, DimensionVector beta,
    const std::map<std::string, RationalMatrix>& matrices)
    : quiver_(std::move(q)), dims_(std::move(beta)) {
  if (dims_.size() != quiver_->num_vertices()) {
    throw DimensionMismatch("dimension vector length != vertex count");
  }
  matrices_.resize(quiver_->num_arrows());
  std::size_t used = 0;
  for (const auto& [id, mat] : matrices) {
    std::size_t ai = quiver_->arrow_index(id);
    const Arrow& a = quiver_->arrows()[ai];
    std::size_t want_rows = (std::size_t)dims_[quiver_->vertex_index(a.head)];
    std::size_t want_cols = (std::size_t)dims_[quiver_->vertex_index(a.tail)];
    if (mat.rows() != want_rows || mat.cols() != want_cols) {
      throw ShapeError("matrix for arrow '" + id + "' must be " +
                       std::to_string(want_rows) + "x" +
                       std::to_string(want_cols));
    }
    matrices_[ai] = mat;
    ++used;
  }
  if (used != quiver_->num_arrows()) {
    throw QuiverError("representation must assign a matrix to every arrow");
  }
}

const RationalMatrix& Representation::matrix(const std::string& id) const {
  return matrices_[quiver_->arrow_index(id)];
}

RationalMatrix evaluate_path(const Representation& w, const Path& p) {
  const Quiver& q = w.quiver();
  RationalMatrix result = w.matrix(p.arrows().front());
  for (std::size_t k = 1; k < p.arrows().size(); ++k) {
    result = w.matrix(q.arrow_index(p.arrows()[k])) * result;
  }
  return result;
}

RationalMatrix evaluate_combination(const Representation& w,
                                    const LinearCombination& c,
                                    const std::string& source,
                                    const std::string& target) {
  const Quiver& q = w.quiver();
  std::size_t rows = (std::size_t)w.dims()[q.vertex_index(target)];
  std::size_t cols = (std::size_t)w.dims()[q.vertex_index(source)];
  RationalMatrix sum(rows, cols);
  for (const auto& term : c.terms()) {
    if (term.path.source() != source || term.path.target() != target) {
      throw ShapeError("combination path endpoints disagree");
    }
    sum.accumulate_block(evaluate_path(w, term.path), 0, 0, term.coeff);
  }
  return sum;
}

std::vector<RelationCheck> check_relations(const Representation& w,
                                           const std::vector<Relation>& rels) {
  std::vector<RelationCheck> out;
  out.reserve(rels.size());
  for (const auto& rel : rels) {
    const Quiver& q = w.quiver();
    std::size_t rows = (std::size_t)w.dims()[q.vertex_index(rel.target())];
    std::size_t cols = (std::size_t)w.dims()[q.vertex_index(rel.source())];
    RationalMatrix residual(rows, cols);
    for (const auto& term : rel.terms()) {
      residual.accumulate_block(evaluate_path(w, term.path), 0, 0, term.coeff);
    }
    out.push_back({residual.is_zero(), std::move(residual)});
  }
  return out;
}

Representation apply_base_change(const std::vector<RationalMatrix>& g,
                                 const Representation& w) {
  const Quiver& q = w.quiver();
  if (g.size() != q.num_vertices()) {
    throw DimensionMismatch("base change needs one matrix per vertex");
  }
  std::vector<RationalMatrix> g_inv(g.size());
  for (std::size_t x = 0; x < g.size(); ++x) {
    std::size_t d = (std::size_t)w.dims()[x];
    if (g[x].rows() != d || g[x].cols() != d) {
      throw DimensionMismatch("base change at '" + q.vertices()[x] +
                              "' must be " + std::to_string(d) + "x" +
                              std::to_string(d));
    }
    auto inv = inverse(g[x]);
    if (!inv) {
      throw SingularBaseChange("singular base change at vertex '" +
                               q.vertices()[x] + "'");
    }
    g_inv[x] = std::move(*inv);
  }
  std::map<std::string, RationalMatrix> out;
  for (const auto& a : q.arrows()) {
    std::size_t t = q.vertex_index(a.tail), h = q.vertex_index(a.head);
    out.emplace(a.id, g[h] * w.matrix(a.id) * g_inv[t]);
  }
  return Representation(w.quiver_ptr(), w.dims(), out);
}

}  // namespace quiver
