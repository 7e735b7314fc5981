#include "quiver/euler.hpp"

namespace quiver {

std::vector<std::vector<long long>> euler_matrix(const Quiver& q) {
  std::size_t n = q.num_vertices();
  std::vector<std::vector<long long>> e(n, std::vector<long long>(n, 0));
  for (std::size_t x = 0; x < n; ++x) e[x][x] = 1;
  for (const auto& a : q.arrows()) {
    e[q.vertex_index(a.tail)][q.vertex_index(a.head)] -= 1;
  }
  return e;
}

long long euler_form(const Quiver& q, const std::vector<long long>& alpha,
                     const std::vector<long long>& beta,
                     const std::vector<Relation>& relations) {
  if (!relations.empty()) {
    throw BoundAlgebraUnsupported(
        "Euler form of a bound quiver algebra is not computed here");
  }
  if (alpha.size() != q.num_vertices() || beta.size() != q.num_vertices()) {
    throw DimensionMismatch("euler_form vector length != vertex count");
  }
  long long sum = 0;
  for (std::size_t x = 0; x < q.num_vertices(); ++x) {
    sum += alpha[x] * beta[x];
  }
  for (const auto& a : q.arrows()) {
    sum -= alpha[q.vertex_index(a.tail)] * beta[q.vertex_index(a.head)];
  }
  return sum;
}

std::pair<long long, long long> hom_ext_dims(
    const Representation& v, const Representation& w,
    const std::vector<Relation>& relations) {
  if (!relations.empty()) {
    throw BoundAlgebraUnsupported(
        "Hom/Ext over a bound quiver algebra is not computed here");
  }
  const Quiver& q = v.quiver();
  if (&q != &w.quiver() && (q.vertices() != w.quiver().vertices() ||
                            q.arrows() != w.quiver().arrows())) {
    throw DimensionMismatch("hom_ext_dims needs a shared quiver");
  }

  std::size_t n = q.num_vertices();
  // Domain: f(x) in Hom(V(x), W(x)), a w(x) x v(x) matrix, row-major.
  std::vector<std::size_t> dom_offset(n + 1, 0);
  for (std::size_t x = 0; x < n; ++x) {
    dom_offset[x + 1] =
        dom_offset[x] + (std::size_t)(w.dims()[x] * v.dims()[x]);
  }
  // Codomain: one w(ha) x v(ta) block per arrow.
  std::size_t m = q.num_arrows();
  std::vector<std::size_t> cod_offset(m + 1, 0);
  for (std::size_t ai = 0; ai < m; ++ai) {
    const Arrow& a = q.arrows()[ai];
    std::size_t rows = (std::size_t)w.dims()[q.vertex_index(a.head)];
    std::size_t cols = (std::size_t)v.dims()[q.vertex_index(a.tail)];
    cod_offset[ai + 1] = cod_offset[ai] + rows * cols;
  }

  std::size_t dim_dom = dom_offset[n];
  std::size_t dim_cod = cod_offset[m];
  RationalMatrix phi(dim_cod, dim_dom);

  // Phi(f)_a = W(a) f(ta) - f(ha) V(a), filled basis element by basis
  // element: f = E^{(x)}_{alpha,beta} gives
  //   (W(a) E)[i][j]  = W(a)[i][alpha] * delta_{j,beta}   for ta = x,
  //   (E V(a))[i][j]  = delta_{i,alpha} * V(a)[beta][j]   for ha = x.
  for (std::size_t ai = 0; ai < m; ++ai) {
    const Arrow& a = q.arrows()[ai];
    std::size_t ta = q.vertex_index(a.tail), ha = q.vertex_index(a.head);
    std::size_t v_ta = (std::size_t)v.dims()[ta];
    std::size_t w_ha = (std::size_t)w.dims()[ha];
    const RationalMatrix& wa = w.matrix(ai);
    const RationalMatrix& va = v.matrix(ai);

    for (std::size_t al = 0; al < (std::size_t)w.dims()[ta]; ++al) {
      for (std::size_t be = 0; be < v_ta; ++be) {
        std::size_t col = dom_offset[ta] + al * v_ta + be;
        for (std::size_t i = 0; i < w_ha; ++i) {
          phi.at(cod_offset[ai] + i * v_ta + be, col) += wa.at(i, al);
        }
      }
    }
    for (std::size_t al = 0; al < w_ha; ++al) {
      for (std::size_t be = 0; be < (std::size_t)v.dims()[ha]; ++be) {
        std::size_t col = dom_offset[ha] + al * (std::size_t)v.dims()[ha] + be;
        for (std::size_t j = 0; j < v_ta; ++j) {
          phi.at(cod_offset[ai] + al * v_ta + j, col) -= va.at(be, j);
        }
      }
    }
  }

  std::size_t rank = exact_rank(phi);
  return {(long long)(dim_dom - rank), (long long)(dim_cod - rank)};
}

}  // namespace quiver
