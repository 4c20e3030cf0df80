#include "regal/growth.hpp"

#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "regal/parallel.hpp"

namespace regal {

namespace {

double max_entry_modulus(const CMatrix& M) {
  double m = 0.0;
  for (Eigen::Index i = 0; i < M.rows(); ++i)
    for (Eigen::Index j = 0; j < M.cols(); ++j) m = std::max(m, std::abs(M(i, j)));
  return m;
}

double log_opnorm(const CMatrix& M) {
  Eigen::JacobiSVD<CMatrix> svd(M);
  return std::log(svd.singularValues()(0));
}

}  // namespace

GrowthRate growth_rate_generic(const std::function<CPoint(const CPoint&)>& step,
                               const std::function<CMatrix(const CPoint&)>& jac,
                               const std::function<bool(const CPoint&)>& in_domain,
                               const std::vector<CPoint>& samples, int k_max, int direction,
                               int workers, const std::string& descriptor) {
  if (samples.empty()) throw std::invalid_argument("growth_rate: empty sample set");
  if (k_max < 2) throw std::invalid_argument("growth_rate: k_max must be >= 2");
  if (direction != 1 && direction != -1)
    throw std::invalid_argument("growth_rate: direction must be +1 or -1");

  const int n = static_cast<int>(samples.front().z.size());
  constexpr double kDropped = -std::numeric_limits<double>::infinity();

  // Per sample: log ||product of k Jacobians|| for k = 1..k_max, renormalized
  // each step; -inf marks the steps after a sample's orbit left the domain.
  // Partial rows are kept: a point seeded slightly off an invariant set still
  // contributes every k it survives, and only the deepest k's lose coverage.
  std::vector<std::vector<double>> lognorm(samples.size());
  parallel_for(samples.size(), workers, [&](size_t i) {
    std::vector<double> row(static_cast<size_t>(k_max), kDropped);
    CPoint q = samples[i];
    CMatrix M = CMatrix::Identity(n, n);
    double logscale = 0.0;
    for (int k = 1; k <= k_max; ++k) {
      if (q.escaped || !all_finite(q) || !in_domain(q)) break;
      M = jac(q) * M;
      q = step(q);
      const double m = max_entry_modulus(M);
      if (!(m > 0.0) || !std::isfinite(m)) break;
      M /= m;
      logscale += std::log(m);
      row[static_cast<size_t>(k - 1)] = logscale + log_opnorm(M);
    }
    lognorm[i] = std::move(row);
  });

  GrowthRate out;
  out.direction = direction;
  out.sample_descriptor = descriptor;
  for (const auto& row : lognorm)
    (row.front() == kDropped ? out.dropped : out.samples_used) += 1;
  if (out.samples_used == 0) throw std::runtime_error("growth_rate: every sample left the domain");

  // s_k = (1/k) log max over samples still alive at depth k; max in index
  // order is deterministic and worker-count independent. The table ends at
  // the deepest k any sample reached.
  for (int k = 1; k <= k_max; ++k) {
    double best = kDropped;
    for (const auto& row : lognorm)
      if (row[static_cast<size_t>(k - 1)] != kDropped)
        best = std::max(best, row[static_cast<size_t>(k - 1)]);
    if (best == kDropped) break;
    out.per_k.emplace_back(k, best / k);
  }

  // Extrapolation: LSQ slope of k*s_k over the last third of the delivered
  // table (subadditive sequences approach the limit through increments).
  const int k_top = static_cast<int>(out.per_k.size());
  const int lo = std::max(0, k_top - std::max(2, k_top / 3));
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int npts = 0;
  for (int i = lo; i < k_top; ++i) {
    const double x = static_cast<double>(out.per_k[static_cast<size_t>(i)].first);
    const double y = x * out.per_k[static_cast<size_t>(i)].second;
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++npts;
  }
  const double denom = npts * sxx - sx * sx;
  out.s = denom != 0.0 ? (npts * sxy - sx * sy) / denom : out.per_k.back().second;
  return out;
}

GrowthRate growth_rate(const MapSpec& m, const FiltrationSpec& fs,
                       const std::vector<CPoint>& samples, int k_max, int direction, int workers,
                       const std::string& descriptor) {
  const auto step = [&m, direction](const CPoint& q) {
    return direction > 0 ? m.eval_forward(q) : m.eval_inverse(q);
  };
  const auto jac = [&m, direction](const CPoint& q) {
    return direction > 0 ? m.jacobian(q) : m.inverse_jacobian(q);
  };
  const auto in_domain = [&fs](const CPoint& q) { return fs.classify(q) == Region::V; };
  return growth_rate_generic(step, jac, in_domain, samples, k_max, direction, workers, descriptor);
}

double log_cocycle_norm(const MapSpec& m, const CPoint& p, int k, int direction) {
  if (k < 1) throw std::invalid_argument("log_cocycle_norm: k must be >= 1");
  CPoint q = p;
  CMatrix M = CMatrix::Identity(m.n(), m.n());
  double logscale = 0.0;
  for (int s = 0; s < k; ++s) {
    if (q.escaped || !all_finite(q)) throw std::domain_error("log_cocycle_norm: orbit escaped");
    M = (direction > 0 ? m.jacobian(q) : m.inverse_jacobian(q)) * M;
    q = direction > 0 ? m.eval_forward(q) : m.eval_inverse(q);
    const double mm = max_entry_modulus(M);
    if (!(mm > 0.0) || !std::isfinite(mm))
      throw std::domain_error("log_cocycle_norm: degenerate product");
    M /= mm;
    logscale += std::log(mm);
  }
  return logscale + log_opnorm(M);
}

}  // namespace regal
