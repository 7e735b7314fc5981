#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "quiver/datum.hpp"

namespace quiver {

enum class SpanAnswer { Yes, No };

enum class SpanMethod {
  Randomized,
  Symbolic,
  // N = 0 (det of the empty matrix is 1) or empty family with N > 0
  // (the span is {0}); decided without sampling or expansion.
  Structural,
};

// Outcome of a span test. YES always carries a certificate that re-verifies
// by exact determinant; NO is either proven (symbolic/structural) or carries
// a one-sided failure probability (randomized).
struct SpanDecision {
  SpanAnswer answer;
  SpanMethod method;
  std::vector<long long> certificate;  // coefficient vector, YES only
  Rational certificate_det;            // nonzero, YES only
  double failure_probability = 0.0;    // randomized NO: (N/S)^k
  bool proven_zero = false;            // NO with determinant polynomial == 0
  long long weight_scale = 1;          // which multiple n*sigma was tested
  long long matrix_size = 0;
  std::size_t family_size = 0;
};

/// Recomputes det(sum c_k A_k) exactly and compares with the stored value.
bool verify_certificate(const BlockMatrixFamily& f, const SpanDecision& d);

struct RandomizedParams {
  int trials = 40;
  long long sample_bound = 0;  // 0: use 2N (2 when N = 0/1)
  std::uint64_t seed = 0;
};

/// Schwartz-Zippel on det(sum t_k A_k): k independent coefficient vectors
/// drawn uniformly from {0..S-1}^|F|. YES is always correct; NO fails with
/// probability <= (N/S)^k.
SpanDecision randomized_span_test(const BlockMatrixFamily& f,
                                  const RandomizedParams& params = {});

struct SymbolicCaps {
  long long max_size = 8;         // N
  std::size_t max_operators = 12;  // |F|
};

// Exact multivariate polynomial det(sum t_k A_k), one variable per family
// member, expanded over the structurally nonzero cells only.
class DetPolynomial {
 public:
  using Monomial = std::vector<std::uint8_t>;  // exponent per variable

  struct MonomialHash {
    std::size_t operator()(const Monomial& m) const;
  };
  using TermMap = std::unordered_map<Monomial, Rational, MonomialHash>;

  DetPolynomial() = default;
  explicit DetPolynomial(std::size_t num_vars) : num_vars_(num_vars) {}

  std::size_t num_vars() const { return num_vars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t num_terms() const { return terms_.size(); }

  void add_term(const Monomial& m, const Rational& coeff);
  Rational coefficient(const Monomial& m) const;
  Rational evaluate(const std::vector<long long>& point) const;

 private:
  std::size_t num_vars_ = 0;
  TermMap terms_;
};

/// Full expansion of det(sum t_k A_k); throws SizeCapExceeded beyond caps.
DetPolynomial symbolic_determinant(const BlockMatrixFamily& f,
                                   const SymbolicCaps& caps = {});

/// Deterministic and exact: YES iff the determinant polynomial has a nonzero
/// coefficient. Throws SizeCapExceeded (use the randomized test instead).
SpanDecision symbolic_span_test(const BlockMatrixFamily& f,
                                const SymbolicCaps& caps = {});

enum class OracleMode { Randomized, Symbolic, Auto };

struct MembershipOptions {
  OracleMode mode = OracleMode::Auto;
  RandomizedParams randomized;
  SymbolicCaps symbolic;
  long long weight_scale = 1;  // test n*sigma instead of sigma
};

/// Builds the family of (W, n*sigma) and runs the selected test. Auto tries
/// symbolic and falls back to randomized when a cap is exceeded.
SpanDecision decide_membership(const QuiverDatum& d,
                               const MembershipOptions& opts = {});

}  // namespace quiver
