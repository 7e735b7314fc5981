#pragma once

#include <utility>
#include <vector>

#include "quiver/quiver.hpp"
#include "quiver/representation.hpp"

namespace quiver {

/// Euler matrix of the path algebra KQ: E[x][y] = delta_{xy} - #{arrows x->y}.
/// Unipotent upper-triangular when rows/columns follow a topological order.
std::vector<std::vector<long long>> euler_matrix(const Quiver& q);

/// <alpha, beta> = sum_x alpha(x)beta(x) - sum_a alpha(ta)beta(ha), i.e.
/// alpha^T E beta. Hereditary only: a nonempty relation set is refused.
long long euler_form(const Quiver& q, const std::vector<long long>& alpha,
                     const std::vector<long long>& beta,
                     const std::vector<Relation>& relations = {});

/// (dim Hom(V,W), dim Ext^1(V,W)) over KQ, by exact rank of the map
/// Phi(f)_a = W(a) f(ta) - f(ha) V(a). Satisfies hom - ext = <dim V, dim W>.
std::pair<long long, long long> hom_ext_dims(
    const Representation& v, const Representation& w,
    const std::vector<Relation>& relations = {});

}  // namespace quiver
