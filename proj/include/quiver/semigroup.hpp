#pragma once

#include <optional>
#include <vector>

#include "quiver/capacity.hpp"
#include "quiver/edmonds.hpp"

namespace quiver {

enum class WeightSemigroupAnswer { Yes, No, Unsupported };

// Hereditary weight-semigroup test: on the full subquiver over supp(beta),
// sigma restricts to <alpha, -> for a unique integer alpha (the Euler matrix
// is unipotent triangular); membership is alpha >= 0 componentwise.
struct WeightSemigroupResult {
  WeightSemigroupAnswer answer = WeightSemigroupAnswer::Unsupported;
  // The solved alpha over supp(beta) (quiver order), echoed also on No.
  std::vector<long long> alpha;
  std::vector<std::string> support;  // vertices carrying alpha
};

WeightSemigroupResult weight_semigroup_member(
    const Quiver& q, const DimensionVector& beta, const Weight& sigma,
    const std::vector<Relation>& relations = {});

struct MembershipReport {
  std::vector<long long> sigma;
  SpanDecision sigma_in_s;           // exact side
  CapacityReport semistable;         // capacity side
  WeightSemigroupResult weight_semigroup;
};

struct OrbitMembershipOptions {
  MembershipOptions oracle;
  CapacityParams capacity;
  std::vector<Relation> relations;  // forwarded to the hereditary solve
};

/// Runs all three probes and enforces the theorem-grade invariants:
/// exact YES with capacity ZERO, or exact YES outside the hereditary weight
/// semigroup, raise InconsistencyAlarm.
MembershipReport orbit_membership(const QuiverDatum& d,
                                  const OrbitMembershipOptions& opts = {});

enum class SaturationStatus {
  ConsistentErp,
  WitnessedNonSaturated,
  Inconclusive,
};

struct SaturationReport {
  SaturationStatus status = SaturationStatus::Inconclusive;
  std::optional<int> witness_n;  // smallest n with n*sigma in S, if any
  std::vector<SpanDecision> per_n;  // exact decisions for n = 1..n_max
  CapacityReport capacity;          // on sigma itself
};

struct SaturationOptions {
  int n_max = 4;
  MembershipOptions oracle;  // weight_scale is overridden per n
  CapacityParams capacity;
};

/// Exact membership for n*sigma, n = 1..n_max, plus capacity on sigma.
/// WITNESSED_NON_SATURATED needs sigma not-in-S proven exactly AND an exact
/// certificate for some n >= 2; a randomized-only NO downgrades the status
/// to INCONCLUSIVE.
SaturationReport saturation_probe(const QuiverDatum& d,
                                  const SaturationOptions& opts = {});

}  // namespace quiver
