#pragma once

#include <map>
#include <string>
#include <vector>

#include "quiver/quiver.hpp"
#include "quiver/rational_matrix.hpp"

namespace quiver {

// Rational representation of a quiver: one beta(ha) x beta(ta) matrix per
// arrow. Immutable after construction; shares the quiver by shared_ptr.
class Representation {
 public:
  Representation(QuiverPtr q, DimensionVector beta,
                 const std::map<std::string, RationalMatrix>& matrices);

  const Quiver& quiver() const { return *quiver_; }
  const QuiverPtr& quiver_ptr() const { return quiver_; }
  const DimensionVector& dims() const { return dims_; }

  const RationalMatrix& matrix(std::size_t arrow_index) const {
    return matrices_[arrow_index];
  }
  const RationalMatrix& matrix(const std::string& arrow_id) const;

 private:
  QuiverPtr quiver_;
  DimensionVector dims_;
  std::vector<RationalMatrix> matrices_;  // by arrow index
};

/// W(p) = W(a_k)...W(a_1) for traversal order [a_1,...,a_k]; the first
/// traversed arrow is applied first. Shape beta(target) x beta(source).
RationalMatrix evaluate_path(const Representation& w, const Path& p);

/// Sum of coeff * W(p); `source`/`target` fix the shape when the combination
/// is empty.
RationalMatrix evaluate_combination(const Representation& w,
                                    const LinearCombination& c,
                                    const std::string& source,
                                    const std::string& target);

struct RelationCheck {
  bool passes;
  RationalMatrix residual;
};

/// A relation passes iff its combination evaluates to the exact zero matrix.
std::vector<RelationCheck> check_relations(const Representation& w,
                                           const std::vector<Relation>& rels);

/// (g.W)(a) = g(ha) W(a) g(ta)^{-1}; g is indexed by quiver vertex order.
/// Throws SingularBaseChange / DimensionMismatch.
Representation apply_base_change(const std::vector<RationalMatrix>& g,
                                 const Representation& w);

}  // namespace quiver
