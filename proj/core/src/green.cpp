#include "regal/green.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace regal {

namespace {

// Shared driver: step = one application of the map, deg = its algebraic degree.
template <typename Step>
GreenEval green_impl(const CPoint& p, int deg, const GreenOptions& opts, Step step) {
  if (opts.budget < 1) throw std::invalid_argument("green: budget must be >= 1");
  if (opts.big_radius <= 1.0) throw std::invalid_argument("green: big_radius must exceed 1");
  GreenEval out;
  const double d = static_cast<double>(deg);

  CPoint q = p;
  int k = 0;
  while (k <= opts.budget) {
    if (q.escaped || !all_finite(q) || norm_inf(q) > opts.big_radius) break;
    q = step(q);
    ++k;
  }
  if (k > opts.budget) {
    out.budget_limited = true;
    out.k = opts.budget;
    return out;  // bounded orbit: G = 0 by the budget-limited convention
  }

  out.escaped = true;
  out.k = k;
  double nq = norm_inf(q);
  if (!std::isfinite(nq)) nq = std::numeric_limits<double>::max();
  const double gk = std::log(nq) / std::pow(d, k);
  // One refinement step; beyond big_radius the increments shrink by 1/d, so
  // the observed step bounds the remaining tail geometrically.
  CPoint next = step(q);
  if (!next.escaped && all_finite(next) && norm_inf(next) > 1.0) {
    const double gk1 = std::log(norm_inf(next)) / std::pow(d, k + 1);
    out.value = gk1;
    out.k = k + 1;
    out.trunc_error = std::abs(gk1 - gk) / (d - 1.0);
  } else {
    out.value = gk;
    out.trunc_error = gk / (d - 1.0);  // crude: no refined step available
  }
  return out;
}

}  // namespace

GreenEval green_plus(const MapSpec& m, const CPoint& p, const GreenOptions& opts) {
  return green_impl(p, m.degree(), opts, [&](const CPoint& q) { return m.eval_forward(q); });
}

GreenEval green_minus(const MapSpec& m, const CPoint& p, const GreenOptions& opts) {
  return green_impl(p, m.inverse_degree(), opts,
                    [&](const CPoint& q) { return m.eval_inverse(q); });
}

HolderFit holder_exponent_estimate(const MapSpec& m, const CPoint& p0, const CPoint& p1,
                                   int levels, const GreenOptions& opts) {
  if (levels < 3) throw std::invalid_argument("holder_exponent_estimate: levels must be >= 3");
  if (p0.z.size() != p1.z.size() || static_cast<int>(p0.z.size()) != m.n())
    throw std::invalid_argument("holder_exponent_estimate: endpoint dimension mismatch");

  const auto at = [&](double t) {
    CPoint q;
    q.z.resize(p0.z.size());
    for (size_t c = 0; c < p0.z.size(); ++c) q.z[c] = p0.z[c] + t * (p1.z[c] - p0.z[c]);
    return q;
  };
  const auto gplus = [&](double t) { return green_plus(m, at(t), opts).value; };

  // Membership threshold. A point polished onto K+ still carries ~1e-12
  // coordinate error; the unstable stretch amplifies it each step, so the
  // orbit escapes after k ~ 18 iterations and the rate evaluator reports
  // log(big_radius)/d^k — up to ~1e-3, not zero. Genuine outside points at
  // the fit's finest offset sit near 1e-2, safely above the threshold.
  constexpr double kInKplus = 1e-3;
  if (gplus(0.0) > kInKplus)
    throw std::invalid_argument("holder_exponent_estimate: segment start must lie in K+");
  if (gplus(1.0) <= kInKplus)
    throw std::invalid_argument("holder_exponent_estimate: segment does not cross J+");

  // Bisect to the K+ boundary along the segment.
  double lo = 0.0, hi = 1.0;
  for (int i = 0; i < 80 && (hi - lo) > 1e-15; ++i) {
    const double mid = 0.5 * (lo + hi);
    (gplus(mid) > kInKplus ? hi : lo) = mid;
  }
  HolderFit fit;
  fit.boundary_t = lo;

  double seglen = 0.0;
  for (size_t c = 0; c < p0.z.size(); ++c) seglen = std::max(seglen, std::abs(p1.z[c] - p0.z[c]));
  for (int j = 1; j <= levels; ++j) {
    const double dt = (1.0 - lo) * std::pow(2.0, -j);
    if (dt <= 1e-14) break;
    const double g = gplus(lo + dt);
    // Fit floor an order above the membership threshold: the bisected
    // boundary sits where G+ crosses kInKplus, so samples close to that
    // value carry a comparable location error and would bend the slope.
    if (g <= 10.0 * kInKplus) continue;
    fit.samples.emplace_back(std::log(dt * seglen), std::log(g));
  }
  if (fit.samples.size() < 3)
    throw std::runtime_error("holder_exponent_estimate: too few positive samples near J+");

  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double npts = static_cast<double>(fit.samples.size());
  for (const auto& [x, y] : fit.samples) {
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double denom = npts * sxx - sx * sx;
  if (denom == 0.0) throw std::runtime_error("holder_exponent_estimate: degenerate abscissae");
  fit.exponent = (npts * sxy - sx * sy) / denom;
  const double intercept = (sy - fit.exponent * sx) / npts;
  for (const auto& [x, y] : fit.samples)
    fit.fit_residual = std::max(fit.fit_residual, std::abs(fit.exponent * x + intercept - y));
  return fit;
}

}  // namespace regal
