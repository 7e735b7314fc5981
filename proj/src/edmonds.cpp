#include "quiver/edmonds.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace quiver {

namespace {

// splitmix64; per-trial seeds follow the "master advanced i times" contract.
struct SplitMix64 {
  std::uint64_t state;

  std::uint64_t next() {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
};

std::uint64_t advance(std::uint64_t seed, int steps) {
  SplitMix64 g{seed};
  for (int k = 0; k < steps; ++k) g.next();
  return g.state;
}

// Unbiased draw from [0, bound) by rejection; bound >= 1.
std::uint64_t bounded_draw(SplitMix64& g, std::uint64_t bound) {
  std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t v;
  do {
    v = g.next();
  } while (v >= limit);
  return v % bound;
}

}  // namespace

bool verify_certificate(const BlockMatrixFamily& f, const SpanDecision& d) {
  if (d.answer != SpanAnswer::Yes) return false;
  if (f.matrix_size() == 0) return d.certificate_det == 1;
  if (d.certificate.size() != f.size()) return false;
  Rational det = determinant(f.combine(d.certificate));
  return det != 0 && det == d.certificate_det;
}

SpanDecision randomized_span_test(const BlockMatrixFamily& f,
                                  const RandomizedParams& params) {
  SpanDecision d;
  d.method = SpanMethod::Randomized;
  d.matrix_size = f.matrix_size();
  d.family_size = f.size();

  long long n = f.matrix_size();
  if (n == 0) {
    d.answer = SpanAnswer::Yes;
    d.method = SpanMethod::Structural;
    d.certificate_det = 1;
    return d;
  }
  if (f.size() == 0) {
    d.answer = SpanAnswer::No;
    d.method = SpanMethod::Structural;
    d.proven_zero = true;
    return d;
  }

  if (params.trials < 1) throw QuiverError("trials must be >= 1");
  long long sample_bound =
      params.sample_bound > 0 ? params.sample_bound : 2 * n;
  if (sample_bound < 2 * n) {
    throw QuiverError("sample bound below Schwartz-Zippel requirement 2N");
  }

  for (int trial = 0; trial < params.trials; ++trial) {
    SplitMix64 g{advance(params.seed, trial)};
    std::vector<long long> coeffs(f.size());
    for (auto& c : coeffs) {
      c = (long long)bounded_draw(g, (std::uint64_t)sample_bound);
    }
    Rational det = determinant(f.combine(coeffs));
    if (det != 0) {
      d.answer = SpanAnswer::Yes;
      d.certificate = std::move(coeffs);
      d.certificate_det = std::move(det);
      return d;
    }
  }
  d.answer = SpanAnswer::No;
  d.failure_probability =
      std::pow((double)n / (double)sample_bound, params.trials);
  return d;
}

std::size_t DetPolynomial::MonomialHash::operator()(const Monomial& m) const {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (std::uint8_t b : m) {
    h ^= b;
    h *= 0x100000001b3ULL;
  }
  return (std::size_t)h;
}

void DetPolynomial::add_term(const Monomial& m, const Rational& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational DetPolynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational DetPolynomial::evaluate(const std::vector<long long>& point) const {
  if (point.size() != num_vars_) {
    throw DimensionMismatch("evaluation point has wrong arity");
  }
  Rational total = 0;
  for (const auto& [mono, coeff] : terms_) {
    Rational term = coeff;
    for (std::size_t k = 0; k < mono.size(); ++k) {
      for (std::uint8_t e = 0; e < mono[k]; ++e) term *= point[k];
    }
    total += term;
  }
  return total;
}

DetPolynomial symbolic_determinant(const BlockMatrixFamily& f,
                                   const SymbolicCaps& caps) {
  long long n = f.matrix_size();
  if (n > caps.max_size) {
    throw SizeCapExceeded("matrix size " + std::to_string(n) +
                          " exceeds symbolic cap " +
                          std::to_string(caps.max_size));
  }
  if (f.size() > caps.max_operators) {
    throw SizeCapExceeded("family size " + std::to_string(f.size()) +
                          " exceeds symbolic cap " +
                          std::to_string(caps.max_operators));
  }
  if (n > 30) throw SizeCapExceeded("symbolic expansion limited to N <= 30");

  std::size_t vars = f.size();
  DetPolynomial one(vars);
  one.add_term(DetPolynomial::Monomial(vars, 0), 1);
  if (n == 0) return one;  // det of the empty matrix

  // cells[row][col]: the linear form sum_k coeff * t_k at that position,
  // kept sparse over the structurally nonzero contributions.
  std::vector<std::vector<std::vector<std::pair<std::size_t, Rational>>>>
      cells((std::size_t)n,
            std::vector<std::vector<std::pair<std::size_t, Rational>>>(
                (std::size_t)n));
  for (std::size_t k = 0; k < f.size(); ++k) {
    const FamilyEntry& e = f.entries()[k];
    long long r0 = f.row_offset(e.q), c0 = f.col_offset(e.r);
    for (std::size_t i = 0; i < e.block.rows(); ++i) {
      for (std::size_t j = 0; j < e.block.cols(); ++j) {
        const Rational& v = e.block.at(i, j);
        if (v != 0) {
          cells[(std::size_t)r0 + i][(std::size_t)c0 + j].push_back({k, v});
        }
      }
    }
  }

  // Laplace expansion with memoization over column subsets: minors[mask] is
  // the determinant polynomial of rows 0..popcount(mask)-1 and columns mask.
  std::size_t total = (std::size_t)1 << n;
  std::vector<DetPolynomial> minors(total, DetPolynomial(vars));
  minors[0] = one;
  for (std::size_t mask = 1; mask < total; ++mask) {
    std::size_t row = (std::size_t)std::popcount(mask) - 1;
    DetPolynomial acc(vars);
    int position = 0;
    for (std::size_t col = 0; col < (std::size_t)n; ++col) {
      if (!(mask & ((std::size_t)1 << col))) continue;
      const auto& cell = cells[row][col];
      if (!cell.empty()) {
        const DetPolynomial& sub = minors[mask ^ ((std::size_t)1 << col)];
        bool negative = ((row + (std::size_t)position) & 1) != 0;
        for (const auto& [mono, coeff] : sub.terms()) {
          for (const auto& [var, value] : cell) {
            DetPolynomial::Monomial m = mono;
            ++m[var];
            acc.add_term(m, negative ? Rational(-coeff * value)
                                     : Rational(coeff * value));
          }
        }
      }
      ++position;
    }
    minors[mask] = std::move(acc);
  }
  return minors[total - 1];
}

SpanDecision symbolic_span_test(const BlockMatrixFamily& f,
                                const SymbolicCaps& caps) {
  SpanDecision d;
  d.method = SpanMethod::Symbolic;
  d.matrix_size = f.matrix_size();
  d.family_size = f.size();

  if (f.matrix_size() == 0) {
    d.answer = SpanAnswer::Yes;
    d.method = SpanMethod::Structural;
    d.certificate_det = 1;
    return d;
  }
  if (f.size() == 0) {
    d.answer = SpanAnswer::No;
    d.method = SpanMethod::Structural;
    d.proven_zero = true;
    return d;
  }

  DetPolynomial poly = symbolic_determinant(f, caps);
  if (poly.is_zero()) {
    d.answer = SpanAnswer::No;
    d.proven_zero = true;
    return d;
  }

  // Extract an integer point where the polynomial is nonzero; a degree-N
  // polynomial vanishes on at most half of {0..2N-1}^vars draws.
  d.answer = SpanAnswer::Yes;
  long long sample_bound = std::max<long long>(2, 2 * f.matrix_size());
  SplitMix64 g{0x5ca1ab1e0ddba11ULL};
  for (int attempt = 0; attempt < 128; ++attempt) {
    std::vector<long long> point(f.size());
    for (auto& c : point) {
      c = (long long)bounded_draw(g, (std::uint64_t)sample_bound);
    }
    if (poly.evaluate(point) != 0) {
      Rational det = determinant(f.combine(point));
      if (det == 0) throw std::logic_error("certificate re-check failed");
      d.certificate = std::move(point);
      d.certificate_det = std::move(det);
      return d;
    }
  }
  throw std::logic_error("no certificate point found for nonzero polynomial");
}

SpanDecision decide_membership(const QuiverDatum& d,
                               const MembershipOptions& opts) {
  QuiverDatum scaled =
      opts.weight_scale == 1
          ? d
          : QuiverDatum(d.rep, d.sigma.scaled(opts.weight_scale));
  BlockMatrixFamily family = build_block_matrices(scaled);

  SpanDecision decision;
  switch (opts.mode) {
    case OracleMode::Symbolic:
      decision = symbolic_span_test(family, opts.symbolic);
      break;
    case OracleMode::Randomized:
      decision = randomized_span_test(family, opts.randomized);
      break;
    case OracleMode::Auto:
      try {
        decision = symbolic_span_test(family, opts.symbolic);
      } catch (const SizeCapExceeded&) {
        decision = randomized_span_test(family, opts.randomized);
      }
      break;
  }
  decision.weight_scale = opts.weight_scale;
  return decision;
}

}  // namespace quiver
