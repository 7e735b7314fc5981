#include "quiver/capacity.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <utility>

namespace quiver {

CPOperator::CPOperator(std::vector<Eigen::MatrixXd> kraus, long long size)
    : kraus_(std::move(kraus)), size_(size) {
  if (size_ < 0) {
    if (kraus_.empty()) {
      throw DimensionMismatch("empty Kraus list needs an explicit size");
    }
    size_ = kraus_.front().rows();
  }
  for (const auto& a : kraus_) {
    if (a.rows() != size_ || a.cols() != size_) {
      throw DimensionMismatch("Kraus operators must all be N x N");
    }
  }
}

CPOperator CPOperator::from_family(const BlockMatrixFamily& f) {
  long long n = f.matrix_size();
  std::vector<Eigen::MatrixXd> kraus;
  kraus.reserve(f.size());
  for (std::size_t k = 0; k < f.size(); ++k) {
    RationalMatrix dense = f.dense(k);
    Eigen::MatrixXd m(n, n);
    for (long long i = 0; i < n; ++i) {
      for (long long j = 0; j < n; ++j) {
        m(i, j) = rational_to_double(dense.at((std::size_t)i, (std::size_t)j));
      }
    }
    kraus.push_back(std::move(m));
  }
  return CPOperator(std::move(kraus), n);
}

Eigen::MatrixXd CPOperator::apply(const Eigen::MatrixXd& x) const {
  if (x.rows() != size_ || x.cols() != size_) {
    throw DimensionMismatch("apply: X must be N x N");
  }
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(size_, size_);
  for (const auto& a : kraus_) out += a.transpose() * x * a;
  // The exact result is symmetric for symmetric X; keep it that way.
  return 0.5 * (out + out.transpose());
}

Eigen::MatrixXd CPOperator::apply_dual(const Eigen::MatrixXd& x) const {
  if (x.rows() != size_ || x.cols() != size_) {
    throw DimensionMismatch("apply_dual: X must be N x N");
  }
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(size_, size_);
  for (const auto& a : kraus_) out += a * x * a.transpose();
  return 0.5 * (out + out.transpose());
}

namespace {

double distance_to_doubly_stochastic(const std::vector<Eigen::MatrixXd>& kraus,
                                     long long n) {
  Eigen::MatrixXd ti = Eigen::MatrixXd::Zero(n, n);
  Eigen::MatrixXd tsi = Eigen::MatrixXd::Zero(n, n);
  for (const auto& a : kraus) {
    ti += a.transpose() * a;
    tsi += a * a.transpose();
  }
  Eigen::MatrixXd id = Eigen::MatrixXd::Identity(n, n);
  return (ti - id).squaredNorm() + (tsi - id).squaredNorm();
}

struct InverseSqrtResult {
  Eigen::MatrixXd inv_sqrt;
  double log_det = 0.0;
  double eig_ratio = 1.0;
  bool collapsed = false;
};

// Inverse square root via symmetric eigendecomposition; an eigenvalue below
// 1e-14 x the largest counts as rank collapse.
InverseSqrtResult inverse_sqrt(const Eigen::MatrixXd& m) {
  InverseSqrtResult out;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m);
  const auto& values = es.eigenvalues();
  double max_eig = values.maxCoeff();
  if (!(max_eig > 0.0)) {
    out.collapsed = true;
    out.eig_ratio = 0.0;
    return out;
  }
  double min_eig = values.minCoeff();
  out.eig_ratio = min_eig / max_eig;
  if (min_eig < 1e-14 * max_eig) {
    out.collapsed = true;
    return out;
  }
  Eigen::VectorXd inv_sqrt_values(values.size());
  for (Eigen::Index k = 0; k < values.size(); ++k) {
    out.log_det += std::log(values[k]);
    inv_sqrt_values[k] = 1.0 / std::sqrt(values[k]);
  }
  out.inv_sqrt = es.eigenvectors() * inv_sqrt_values.asDiagonal() *
                 es.eigenvectors().transpose();
  return out;
}

}  // namespace

ScalingState make_scaling_state(const CPOperator& t) {
  ScalingState s;
  s.kraus = t.kraus();
  s.size = t.size();
  s.ds = t.size() == 0 ? 0.0 : distance_to_doubly_stochastic(s.kraus, s.size);
  return s;
}

void sinkhorn_step(ScalingState& s) {
  long long n = s.size;

  // Row step: make T(I) = I. With T(X) = sum A^T X A this is the right
  // multiplication A <- A R^{-1/2}, R = sum A^T A.
  Eigen::MatrixXd r = Eigen::MatrixXd::Zero(n, n);
  for (const auto& a : s.kraus) r += a.transpose() * a;
  InverseSqrtResult row = inverse_sqrt(0.5 * (r + r.transpose()));
  s.min_eigenvalue_ratio = std::min(s.min_eigenvalue_ratio, row.eig_ratio);
  if (row.collapsed) {
    ++s.clamp_events;
    s.status = ScalingStatus::Zero;
    return;
  }
  for (auto& a : s.kraus) a = a * row.inv_sqrt;
  s.log_cap_acc += -row.log_det;
  // det T(I) = 1 now, so the current operator's capacity is <= 1 and the
  // original one's is <= exp(-log_cap_acc).
  s.cap_upper_log = -s.log_cap_acc;

  // Column step: make T*(I) = I via A <- C^{-1/2} A, C = sum A A^T.
  Eigen::MatrixXd c = Eigen::MatrixXd::Zero(n, n);
  for (const auto& a : s.kraus) c += a * a.transpose();
  InverseSqrtResult col = inverse_sqrt(0.5 * (c + c.transpose()));
  s.min_eigenvalue_ratio = std::min(s.min_eigenvalue_ratio, col.eig_ratio);
  if (col.collapsed) {
    ++s.clamp_events;
    s.status = ScalingStatus::Zero;
    return;
  }
  for (auto& a : s.kraus) a = col.inv_sqrt * a;
  s.log_cap_acc += -col.log_det;

  ++s.iterations;
  s.ds = distance_to_doubly_stochastic(s.kraus, n);
}

CapacityReport decide_capacity(const CPOperator& t,
                               const CapacityParams& params) {
  long long n = t.size();
  CapacityReport report;
  if (n == 0) {
    report.decision = CapacityDecision::Positive;
    report.capacity_estimate = 1.0;
    return report;
  }

  double threshold =
      params.threshold > 0 ? params.threshold : 1.0 / (double)(n + 1);
  long long max_iters =
      params.max_iters >= 0
          ? params.max_iters
          : 100 * n * n * ((long long)params.input_bits + n);
  constexpr double kZeroBoundLog = -69.0775527898;  // log(1e-30)

  ScalingState s = make_scaling_state(t);
  double previous_ds = s.ds;
  bool first = true;
  while (true) {
    if (s.ds < threshold) {
      s.status = ScalingStatus::Positive;
      break;
    }
    if (s.iterations >= max_iters) {
      s.status = ScalingStatus::Inconclusive;
      break;
    }
    sinkhorn_step(s);
    if (s.status == ScalingStatus::Zero) break;
    if (s.cap_upper_log < kZeroBoundLog) {
      s.status = ScalingStatus::Zero;
      break;
    }
    // Classical Sinkhorn monotonicity, with slack for roundoff; a genuine
    // increase means the numerics are not trustworthy.
    if (!first && s.ds > previous_ds + 1e-9) {
      s.monotonicity_violation = true;
      s.status = ScalingStatus::Inconclusive;
      break;
    }
    previous_ds = s.ds;
    first = false;
  }

  report.iterations = s.iterations;
  report.final_ds = s.ds;
  report.min_eigenvalue_ratio = s.min_eigenvalue_ratio;
  report.clamp_events = s.clamp_events;
  report.monotonicity_violation = s.monotonicity_violation;
  switch (s.status) {
    case ScalingStatus::Positive:
      report.decision = CapacityDecision::Positive;
      report.capacity_estimate = std::exp(-s.log_cap_acc);
      break;
    case ScalingStatus::Zero:
      report.decision = CapacityDecision::Zero;
      break;
    default:
      report.decision = CapacityDecision::Inconclusive;
      break;
  }
  return report;
}

CapacityReport decide_capacity(const BlockMatrixFamily& f,
                               CapacityParams params) {
  if (f.matrix_size() == 0) {
    CapacityReport report;
    report.decision = CapacityDecision::Positive;
    report.capacity_estimate = 1.0;
    return report;
  }
  params.input_bits = f.max_entry_bits();
  return decide_capacity(CPOperator::from_family(f), params);
}

std::optional<double> capacity_scaling_law_check(const CPOperator& t,
                                                 const Eigen::MatrixXd& g,
                                                 const Eigen::MatrixXd& h,
                                                 const CapacityParams& params) {
  std::vector<Eigen::MatrixXd> scaled;
  scaled.reserve(t.kraus().size());
  for (const auto& a : t.kraus()) scaled.push_back(g * a * h);

  CapacityReport base = decide_capacity(t, params);
  CapacityReport after =
      decide_capacity(CPOperator(std::move(scaled), t.size()), params);
  if (base.decision != CapacityDecision::Positive ||
      after.decision != CapacityDecision::Positive) {
    return std::nullopt;
  }
  double factor = std::pow(g.determinant(), 2) * std::pow(h.determinant(), 2);
  double expected = factor * *base.capacity_estimate;
  return std::abs(*after.capacity_estimate - expected) / std::abs(expected);
}

}  // namespace quiver
