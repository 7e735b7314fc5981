#pragma once

#include <Eigen/Dense>

#include <optional>
#include <vector>

#include "quiver/datum.hpp"

namespace quiver {

// Completely positive operator T(X) = sum A^T X A with real Kraus operators;
// T*(X) = sum A X A^T. The solver works entirely in doubles.
class CPOperator {
 public:
  explicit CPOperator(std::vector<Eigen::MatrixXd> kraus, long long size = -1);
  static CPOperator from_family(const BlockMatrixFamily& f);

  long long size() const { return size_; }
  const std::vector<Eigen::MatrixXd>& kraus() const { return kraus_; }

  Eigen::MatrixXd apply(const Eigen::MatrixXd& x) const;
  Eigen::MatrixXd apply_dual(const Eigen::MatrixXd& x) const;

 private:
  std::vector<Eigen::MatrixXd> kraus_;
  long long size_;
};

enum class ScalingStatus { Running, Positive, Zero, Inconclusive };

// Mutable state of the operator-Sinkhorn iteration. log_cap_acc accumulates
// -log det T(I) - log det T*(I) over the normalization steps, so the
// capacity of the ORIGINAL operator is exp(-log_cap_acc) times the capacity
// of the current one (= about 1 at the doubly stochastic limit).
struct ScalingState {
  std::vector<Eigen::MatrixXd> kraus;
  long long size = 0;
  long long iterations = 0;
  double ds = 0.0;           // |T(I)-I|_F^2 + |T*(I)-I|_F^2
  double log_cap_acc = 0.0;
  ScalingStatus status = ScalingStatus::Running;
  // Valid capacity upper bound in logs, recorded right after a row step
  // (where det T(I) = 1 forces cap of the current operator <= 1).
  double cap_upper_log = 0.0;
  // diagnostics
  double min_eigenvalue_ratio = 1.0;  // smallest lambda_min/lambda_max seen
  long long clamp_events = 0;
  bool monotonicity_violation = false;
};

ScalingState make_scaling_state(const CPOperator& t);

/// One full normalization step: make T(I) = I, then T*(I) = I, by inverse
/// square roots from symmetric eigendecompositions. Sets status Zero when an
/// eigenvalue falls below 1e-14 x the largest (rank collapse) and halts.
void sinkhorn_step(ScalingState& s);

struct CapacityParams {
  long long max_iters = -1;   // -1: 100 * N^2 * (input_bits + N)
  double threshold = -1.0;    // -1: 1/(N+1)
  std::size_t input_bits = 53;  // b; from_family reports the exact value
};

enum class CapacityDecision { Positive, Zero, Inconclusive };

struct CapacityReport {
  CapacityDecision decision = CapacityDecision::Inconclusive;
  long long iterations = 0;
  double final_ds = 0.0;
  std::optional<double> capacity_estimate;  // set on Positive
  double min_eigenvalue_ratio = 1.0;
  long long clamp_events = 0;
  bool monotonicity_violation = false;
};

CapacityReport decide_capacity(const CPOperator& t,
                               const CapacityParams& params = {});

/// Convenience: converts the exact family to doubles; input_bits is taken
/// from the family's entries. N = 0 is Positive with estimate exactly 1.
CapacityReport decide_capacity(const BlockMatrixFamily& f,
                               CapacityParams params = {});

/// Relative discrepancy of cap({g A h}) against |det g|^2 |det h|^2 cap({A});
/// nullopt when either decision is not Positive.
std::optional<double> capacity_scaling_law_check(const CPOperator& t,
                                                 const Eigen::MatrixXd& g,
                                                 const Eigen::MatrixXd& h,
                                                 const CapacityParams& params = {});

}  // namespace quiver
