#include "fixtures.hpp"

#include <stdexcept>

namespace fixtures {

std::uint64_t Rng::next() {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

long long Rng::range(long long lo, long long hi) {
  std::uint64_t span = (std::uint64_t)(hi - lo + 1);
  return lo + (long long)(next() % span);
}

QuiverPtr kronecker(int l) {
  std::vector<Arrow> arrows;
  for (int k = 1; k <= l; ++k) {
    arrows.push_back({"a" + std::to_string(k), "1", "2"});
  }
  return std::make_shared<const Quiver>(std::vector<std::string>{"1", "2"},
                                        std::move(arrows));
}

QuiverPtr a_chain(int n, unsigned orientation_mask) {
  std::vector<std::string> vertices;
  for (int v = 1; v <= n; ++v) vertices.push_back(std::to_string(v));
  std::vector<Arrow> arrows;
  for (int k = 0; k + 1 < n; ++k) {
    std::string tail = std::to_string(k + 1), head = std::to_string(k + 2);
    if (orientation_mask & (1u << k)) std::swap(tail, head);
    arrows.push_back({"a" + std::to_string(k + 1), tail, head});
  }
  return std::make_shared<const Quiver>(std::move(vertices),
                                        std::move(arrows));
}

QuiverPtr d4_star(unsigned orientation_mask) {
  std::vector<std::string> vertices{"0", "1", "2", "3"};
  std::vector<Arrow> arrows;
  for (int k = 0; k < 3; ++k) {
    std::string leaf = std::to_string(k + 1);
    std::string tail = leaf, head = "0";
    if (orientation_mask & (1u << k)) std::swap(tail, head);
    arrows.push_back({"a" + std::to_string(k + 1), tail, head});
  }
  return std::make_shared<const Quiver>(std::move(vertices),
                                        std::move(arrows));
}

QuiverPtr wild_example_quiver() {
  std::vector<std::string> vertices{"1", "2", "3", "4", "5"};
  std::vector<Arrow> arrows{{"a", "2", "1"},
                            {"b", "3", "2"},
                            {"c", "3", "1"},
                            {"d", "5", "3"},
                            {"e", "4", "3"}};
  return std::make_shared<const Quiver>(std::move(vertices),
                                        std::move(arrows));
}

RationalMatrix unit_matrix(std::size_t n, std::size_t row, std::size_t col) {
  RationalMatrix m(n, n);
  m.at(row, col) = 1;
  return m;
}

Representation representation_from_integers(
    QuiverPtr q, const std::vector<long long>& dims,
    const std::vector<std::vector<std::vector<long long>>>& per_arrow) {
  if (per_arrow.size() != q->num_arrows()) {
    throw std::invalid_argument("one matrix per arrow expected");
  }
  std::map<std::string, RationalMatrix> matrices;
  for (std::size_t ai = 0; ai < per_arrow.size(); ++ai) {
    const auto& rows = per_arrow[ai];
    std::vector<std::vector<Rational>> rational_rows;
    for (const auto& row : rows) {
      rational_rows.emplace_back(row.begin(), row.end());
    }
    const Arrow& a = q->arrows()[ai];
    RationalMatrix m = RationalMatrix::from_rows(rational_rows);
    if (rows.empty()) {
      m = RationalMatrix(0, (std::size_t)dims[q->vertex_index(a.tail)]);
    }
    matrices.emplace(a.id, std::move(m));
  }
  return Representation(q, DimensionVector::from_values(dims), matrices);
}

Representation random_representation(QuiverPtr q,
                                     const std::vector<long long>& dims,
                                     Rng& rng, long long lo, long long hi,
                                     bool with_denominators) {
  std::map<std::string, RationalMatrix> matrices;
  for (const auto& a : q->arrows()) {
    std::size_t rows = (std::size_t)dims[q->vertex_index(a.head)];
    std::size_t cols = (std::size_t)dims[q->vertex_index(a.tail)];
    RationalMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < cols; ++j) {
        Rational value(rng.range(lo, hi));
        if (with_denominators && rng.range(0, 3) == 0) {
          value /= rng.range(2, 3);
        }
        m.at(i, j) = value;
      }
    }
    matrices.emplace(a.id, std::move(m));
  }
  return Representation(q, DimensionVector::from_values(dims), matrices);
}

Weight random_orthogonal_weight(const DimensionVector& beta, Rng& rng,
                                int moves, long long max_coeff) {
  std::vector<long long> sigma(beta.size(), 0);
  for (int k = 0; k < moves; ++k) {
    std::size_t x = (std::size_t)rng.range(0, (long long)beta.size() - 1);
    std::size_t y = (std::size_t)rng.range(0, (long long)beta.size() - 1);
    if (x == y) continue;
    long long c = rng.range(-max_coeff, max_coeff);
    sigma[x] += c * beta[y];
    sigma[y] -= c * beta[x];
  }
  return Weight::from_values(std::move(sigma));
}

std::vector<RationalMatrix> random_base_change(const Quiver& q,
                                               const DimensionVector& beta,
                                               Rng& rng) {
  std::vector<RationalMatrix> g;
  for (std::size_t x = 0; x < q.num_vertices(); ++x) {
    std::size_t d = (std::size_t)beta[x];
    RationalMatrix m(d, d);
    do {
      for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
          m.at(i, j) = rng.range(-2, 2);
        }
      }
    } while (d > 0 && determinant(m) == 0);
    g.push_back(std::move(m));
  }
  return g;
}

namespace {

void add(std::vector<NamedDatum>& out, const std::string& name,
         Representation rep, std::vector<long long> sigma) {
  out.push_back(
      {name, QuiverDatum(std::move(rep), Weight::from_values(sigma))});
}

}  // namespace

std::vector<NamedDatum> dynkin_kronecker_suite() {
  std::vector<NamedDatum> out;
  Rng rng(0xf1d0);

  // K_1 = A_2 with one arrow: YES iff W(a) has full rank at matched sizes.
  add(out, "K1 scalar unit", representation_from_integers(kronecker(1), {1, 1}, {{{1}}}),
      {1, -1});
  add(out, "K1 scalar zero", representation_from_integers(kronecker(1), {1, 1}, {{{0}}}),
      {1, -1});
  add(out, "K1 identity 2", representation_from_integers(
                                kronecker(1), {2, 2}, {{{1, 0}, {0, 1}}}),
      {1, -1});
  add(out, "K1 rank one", representation_from_integers(
                              kronecker(1), {2, 2}, {{{1, 0}, {0, 0}}}),
      {1, -1});
  add(out, "K1 zero 2x2", representation_from_integers(
                              kronecker(1), {2, 2}, {{{0, 0}, {0, 0}}}),
      {1, -1});
  add(out, "K1 identity scale 2", representation_from_integers(
                                      kronecker(1), {2, 2}, {{{1, 0}, {0, 1}}}),
      {2, -2});

  // K_2 staples: diagonal units span an invertible matrix, both-in-one-row
  // does not.
  add(out, "K2 E11+E22",
      representation_from_integers(kronecker(2), {2, 2},
                                   {{{1, 0}, {0, 0}}, {{0, 0}, {0, 1}}}),
      {1, -1});
  add(out, "K2 E11+E12",
      representation_from_integers(kronecker(2), {2, 2},
                                   {{{1, 0}, {0, 0}}, {{0, 1}, {0, 0}}}),
      {1, -1});
  add(out, "K2 E11+E21",
      representation_from_integers(kronecker(2), {2, 2},
                                   {{{1, 0}, {0, 0}}, {{0, 0}, {1, 0}}}),
      {1, -1});
  add(out, "K2 scalars", representation_from_integers(kronecker(2), {1, 1},
                                                      {{{2}}, {{3}}}),
      {1, -1});
  add(out, "K2 zero scalars", representation_from_integers(
                                  kronecker(2), {1, 1}, {{{0}}, {{0}}}),
      {1, -1});
  add(out, "K2 E11+E22 doubled",
      representation_from_integers(kronecker(2), {2, 2},
                                   {{{1, 0}, {0, 0}}, {{0, 0}, {0, 1}}}),
      {2, -2});
  for (int k = 0; k < 4; ++k) {
    Representation rep = random_representation(kronecker(2), {2, 2}, rng);
    add(out, "K2 random " + std::to_string(k), std::move(rep), {1, -1});
  }

  // K_3.
  add(out, "K3 upper triangle",
      representation_from_integers(kronecker(3), {2, 2},
                                   {{{1, 0}, {0, 0}},
                                    {{0, 0}, {0, 1}},
                                    {{0, 1}, {0, 0}}}),
      {1, -1});
  for (int k = 0; k < 2; ++k) {
    Representation rep = random_representation(kronecker(3), {2, 2}, rng);
    add(out, "K3 random " + std::to_string(k), std::move(rep), {1, -1});
  }

  // A_2 with unbalanced dimensions: the family is {[u|0],[0|u]}, never
  // spanning an invertible matrix.
  add(out, "A2 beta(1,2) tall",
      representation_from_integers(a_chain(2), {1, 2}, {{{1}, {2}}}),
      {2, -1});
  add(out, "A2 beta(2,1) wide",
      representation_from_integers(a_chain(2), {2, 1}, {{{1, 2}}}),
      {1, -2});
  add(out, "A2 invertible", representation_from_integers(
                                a_chain(2), {2, 2}, {{{1, 2}, {3, 4}}}),
      {1, -1});
  add(out, "A2 singular", representation_from_integers(
                              a_chain(2), {2, 2}, {{{1, 2}, {2, 4}}}),
      {1, -1});

  // A_3 chains, both full-path and mid-supported weights.
  add(out, "A3 path product 6",
      representation_from_integers(a_chain(3), {1, 1, 1}, {{{2}}, {{3}}}),
      {1, 0, -1});
  add(out, "A3 path zero",
      representation_from_integers(a_chain(3), {1, 1, 1}, {{{0}}, {{3}}}),
      {1, 0, -1});
  add(out, "A3 two positives",
      representation_from_integers(a_chain(3), {1, 1, 1}, {{{2}}, {{3}}}),
      {1, 1, -2});
  add(out, "A3 middle sink",
      representation_from_integers(a_chain(3, 0b10), {1, 2, 1},
                                   {{{1}, {0}}, {{0}, {1}}}),
      {1, -1, 1});
  add(out, "A3 zigzag", representation_from_integers(
                            a_chain(3, 0b01), {1, 1, 1}, {{{1}}, {{1}}}),
      {-1, 1, 0});
  for (int k = 0; k < 3; ++k) {
    QuiverPtr q = a_chain(3, (unsigned)rng.range(0, 3));
    std::vector<long long> dims{rng.range(1, 2), rng.range(1, 2),
                                rng.range(1, 2)};
    Representation rep = random_representation(q, dims, rng);
    DimensionVector beta = rep.dims();
    Weight sigma = random_orthogonal_weight(beta, rng);
    add(out, "A3 random " + std::to_string(k), std::move(rep),
        sigma.values());
  }

  // D_4 stars.
  add(out, "D4 all in",
      representation_from_integers(d4_star(), {1, 1, 1, 1},
                                   {{{1}}, {{1}}, {{1}}}),
      {-3, 1, 1, 1});
  add(out, "D4 all in, one zero arrow",
      representation_from_integers(d4_star(), {1, 1, 1, 1},
                                   {{{0}}, {{1}}, {{1}}}),
      {-3, 1, 1, 1});
  add(out, "D4 all out",
      representation_from_integers(d4_star(0b111), {1, 1, 1, 1},
                                   {{{1}}, {{1}}, {{1}}}),
      {3, -1, -1, -1});
  add(out, "D4 center 2",
      representation_from_integers(d4_star(), {2, 1, 1, 1},
                                   {{{1}, {0}}, {{0}, {1}}, {{1}, {1}}}),
      {-1, 1, 0, 1});
  for (int k = 0; k < 3; ++k) {
    QuiverPtr q = d4_star((unsigned)rng.range(0, 7));
    std::vector<long long> dims{rng.range(1, 2), rng.range(1, 2),
                                rng.range(1, 2), rng.range(1, 2)};
    Representation rep = random_representation(q, dims, rng);
    DimensionVector beta = rep.dims();
    Weight sigma = random_orthogonal_weight(beta, rng);
    add(out, "D4 random " + std::to_string(k), std::move(rep),
        sigma.values());
  }

  // Zero weight rounds the suite out with the trivial conventions.
  add(out, "K2 zero weight", representation_from_integers(
                                 kronecker(2), {1, 1}, {{{5}}, {{7}}}),
      {0, 0});
  return out;
}

QuiverDatum random_small_instance(Rng& rng) {
  for (;;) {
    QuiverPtr q;
    switch (rng.range(0, 2)) {
      case 0: q = kronecker(2); break;
      case 1: q = a_chain(3, (unsigned)rng.range(0, 3)); break;
      default: q = d4_star((unsigned)rng.range(0, 7)); break;
    }
    std::vector<long long> dims;
    for (std::size_t x = 0; x < q->num_vertices(); ++x) {
      dims.push_back(rng.range(0, 2));
    }
    Representation rep =
        random_representation(q, dims, rng, -3, 3, /*with_denominators=*/true);
    Weight sigma = random_orthogonal_weight(rep.dims(), rng, 3, 1);
    QuiverDatum datum(std::move(rep), std::move(sigma));
    SigmaSplit split = split_weight(datum);
    if (split.matrix_size <= 6) return datum;
  }
}

}  // namespace fixtures
