#include "quiver/semigroup.hpp"

#include <algorithm>

namespace quiver {

WeightSemigroupResult weight_semigroup_member(
    const Quiver& q, const DimensionVector& beta, const Weight& sigma,
    const std::vector<Relation>& relations) {
  if (!relations.empty()) {
    return WeightSemigroupResult{WeightSemigroupAnswer::Unsupported, {}, {}};
  }
  if (sigma.dot(beta) != 0) {
    throw WeightDimensionMismatch("weight-dimension pairing nonzero");
  }

  // Full subquiver on supp(beta). Its Euler matrix is unipotent triangular
  // in topological order, so alpha^T E = sigma|supp has a unique integer
  // solution found by forward substitution.
  std::vector<std::size_t> support = beta.support();
  std::vector<bool> in_support(q.num_vertices(), false);
  for (std::size_t x : support) in_support[x] = true;

  std::vector<std::size_t> order;  // support vertices in topological order
  for (const auto& id : q.topological_order()) {
    std::size_t x = q.vertex_index(id);
    if (in_support[x]) order.push_back(x);
  }

  std::vector<long long> alpha_by_vertex(q.num_vertices(), 0);
  for (std::size_t pos = 0; pos < order.size(); ++pos) {
    std::size_t y = order[pos];
    long long value = sigma[y];
    for (std::size_t prev = 0; prev < pos; ++prev) {
      std::size_t x = order[prev];
      // E[x][y] = -#{arrows x -> y} off the diagonal.
      value += alpha_by_vertex[x] * q.arrow_count(x, y);
    }
    alpha_by_vertex[y] = value;
  }

  WeightSemigroupResult result;
  result.answer = WeightSemigroupAnswer::Yes;
  for (std::size_t x : support) {
    result.alpha.push_back(alpha_by_vertex[x]);
    result.support.push_back(q.vertices()[x]);
    if (alpha_by_vertex[x] < 0) result.answer = WeightSemigroupAnswer::No;
  }
  return result;
}

MembershipReport orbit_membership(const QuiverDatum& d,
                                  const OrbitMembershipOptions& opts) {
  MembershipReport report;
  report.sigma = d.sigma.values();
  report.sigma_in_s = decide_membership(d, opts.oracle);
  report.semistable = decide_capacity(build_block_matrices(d), opts.capacity);
  report.weight_semigroup = weight_semigroup_member(
      d.rep.quiver(), d.rep.dims(), d.sigma, opts.relations);

  if (report.sigma_in_s.answer == SpanAnswer::Yes) {
    if (report.semistable.decision == CapacityDecision::Zero) {
      throw InconsistencyAlarm(
          "sigma in S_Q(W) exactly, but capacity decided ZERO");
    }
    if (report.weight_semigroup.answer == WeightSemigroupAnswer::No) {
      throw InconsistencyAlarm(
          "sigma in S_Q(W) exactly, but outside the hereditary weight "
          "semigroup");
    }
  }
  return report;
}

SaturationReport saturation_probe(const QuiverDatum& d,
                                  const SaturationOptions& opts) {
  if (opts.n_max < 1) throw QuiverError("n_max must be >= 1");

  SaturationReport report;
  report.capacity = decide_capacity(build_block_matrices(d), opts.capacity);

  for (int n = 1; n <= opts.n_max; ++n) {
    MembershipOptions per_n = opts.oracle;
    per_n.weight_scale = n;
    report.per_n.push_back(decide_membership(d, per_n));
  }

  bool sigma_in_s = report.per_n.front().answer == SpanAnswer::Yes;
  bool sigma_no_exact = !sigma_in_s && report.per_n.front().proven_zero;
  std::optional<int> witness;
  for (int n = 1; n <= opts.n_max; ++n) {
    if (report.per_n[(std::size_t)n - 1].answer == SpanAnswer::Yes) {
      witness = n;
      break;
    }
  }
  report.witness_n = witness;

  if (witness.has_value() &&
      report.capacity.decision == CapacityDecision::Zero) {
    throw InconsistencyAlarm(
        "n*sigma in S_Q(W) exactly for n = " + std::to_string(*witness) +
        ", but capacity decided ZERO");
  }

  if (sigma_in_s) {
    report.status = report.capacity.decision == CapacityDecision::Positive
                        ? SaturationStatus::ConsistentErp
                        : SaturationStatus::Inconclusive;
  } else if (witness.has_value()) {
    // A witness n >= 2 plus an exact NO at n = 1 exhibits non-saturation;
    // a randomized-only NO at n = 1 is not proof.
    report.status = sigma_no_exact ? SaturationStatus::WitnessedNonSaturated
                                   : SaturationStatus::Inconclusive;
  } else if (report.capacity.decision == CapacityDecision::Zero) {
    report.status = SaturationStatus::ConsistentErp;  // all signals absent
  } else {
    report.status = SaturationStatus::Inconclusive;
  }
  return report;
}

}  // namespace quiver
