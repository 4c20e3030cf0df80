#include "regal/thermo.hpp"

#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "regal/parallel.hpp"

namespace regal {

std::string weight_name(Weight w) { return w == Weight::Unstable ? "unstable" : "stable"; }

namespace {

// Neumaier compensated accumulation; inputs added in a fixed canonical order
// keep reductions bit-reproducible.
struct NeumaierSum {
  double s = 0.0, c = 0.0;
  void add(double x) {
    const double t = s + x;
    c += std::abs(s) >= std::abs(x) ? (s - t) + x : (x - t) + s;
    s = t;
  }
  double value() const { return s + c; }
};

// Birkhoff weight rate for one cycle: sum of log|lambda| over the expanding
// (unstable) or contracting (stable) multipliers of Df^period.
double weight_rate(const PeriodicOrbit& c, Weight w) {
  NeumaierSum acc;
  for (const Cplx& lam : c.multipliers) {
    const double r = std::abs(lam);
    if (w == Weight::Unstable && r > 1.0) acc.add(std::log(r));
    if (w == Weight::Stable && r < 1.0) acc.add(std::log(r));
  }
  return acc.value();  // > 0 for unstable, < 0 for stable on a saddle
}

}  // namespace

double pressure(const PeriodicCensus& census, double t, Weight w, long long* band_excluded) {
  if (census.k < 1) throw std::domain_error("pressure: empty census");
  long long excluded = 0;
  long long used_fixed_points = 0;

  // Per saddle cycle of minimal period j: every one of its j fixed points of
  // f^k carries exp(t * S_k) with S_k = -(k/j)*L_u or +(k/j)*L_s.
  std::vector<double> logterms;
  for (const PeriodicOrbit& c : census.cycles) {
    if (c.stability == Stability::Indeterminate) {
      excluded += c.period;  // unit-band multiplier would poison the sum
      continue;
    }
    if (c.stability != Stability::Saddle) continue;
    const double ratio = static_cast<double>(census.k) / static_cast<double>(c.period);
    const double S = (w == Weight::Unstable ? -1.0 : 1.0) * ratio * weight_rate(c, w);
    logterms.push_back(std::log(static_cast<double>(c.period)) + t * S);
    used_fixed_points += c.period;
  }
  if (band_excluded) *band_excluded = excluded;
  if (logterms.empty()) throw std::domain_error("pressure: census has no usable saddle orbits");

  // t = 0: the sum is exactly the saddle fixed-point count.
  if (t == 0.0)
    return std::log(static_cast<double>(used_fixed_points)) / census.k;

  double wmax = logterms.front();
  for (double x : logterms) wmax = std::max(wmax, x);
  NeumaierSum acc;  // canonical order: census cycles are sorted
  for (double x : logterms) acc.add(std::exp(x - wmax));
  return (wmax + std::log(acc.value())) / census.k;
}

PressureCurve pressure_curve(const PeriodicCensus& census, const std::vector<double>& t_grid,
                             Weight w) {
  PressureCurve curve;
  curve.k = census.k;
  curve.weight = w;
  for (const PeriodicOrbit& c : census.cycles)
    if (c.stability == Stability::Saddle) curve.orbit_count += c.period;
  for (double t : t_grid) curve.samples.emplace_back(t, pressure(census, t, w, &curve.band_excluded));
  return curve;
}

BowenRuelleRoot bowen_ruelle_root(const std::vector<PeriodicCensus>& censuses, Weight w,
                                  double bracket_hi, double residual_tol) {
  if (censuses.empty()) throw std::invalid_argument("bowen_ruelle_root: no censuses");
  if (!(bracket_hi > 0.0)) throw std::invalid_argument("bowen_ruelle_root: bad bracket");
  BowenRuelleRoot root;
  for (const PeriodicCensus& census : censuses) {
    const double p0 = pressure(census, 0.0, w);
    const double p1 = pressure(census, bracket_hi, w);
    if (!(p0 > 0.0) || !(p1 < 0.0))
      throw std::domain_error("bowen_ruelle_root: pressure has no root in [0, " +
                              std::to_string(bracket_hi) + "] at k=" + std::to_string(census.k));
    double lo = 0.0, hi = bracket_hi, mid = 0.5 * bracket_hi, pm = 0.0;
    for (int it = 0; it < 200; ++it) {
      mid = 0.5 * (lo + hi);
      pm = pressure(census, mid, w);
      if (std::abs(pm) <= residual_tol || hi - lo <= 1e-15) break;
      (pm > 0.0 ? lo : hi) = mid;
    }
    root.convergence.emplace_back(census.k, mid);
    root.t = mid;
    root.lo = lo;
    root.hi = hi;
    root.k = census.k;
    root.residual = std::abs(pm);
  }
  return root;
}

EntropyEstimate entropy_estimate(const MapSpec& m, const std::vector<PeriodicCensus>& censuses) {
  EntropyEstimate est;
  if (m.regularity_index())
    est.target = *m.regularity_index() * std::log(static_cast<double>(m.degree()));
  for (const PeriodicCensus& census : censuses) {
    EntropyEstimate::Row row;
    row.k = census.k;
    row.count = census.saddle_fixed_point_count;
    row.h = row.count > 0 ? std::log(static_cast<double>(row.count)) / census.k
                          : std::numeric_limits<double>::quiet_NaN();
    est.per_k.push_back(row);
  }
  return est;
}

double stable_set_dimension(const MapSpec& m, const PeriodicCensus& census, double t_u) {
  for (const PeriodicOrbit& c : census.cycles)
    if (c.stability == Stability::Saddle && c.unstable_index != 1)
      throw std::domain_error("stable_set_dimension: census has a saddle of unstable index != 1");
  if (!(t_u > 0.0) || !(t_u < 2.0))
    throw std::domain_error("stable_set_dimension: t^u outside (0, 2)");
  return t_u + 2.0 * m.n() - 2.0;
}

double upper_bound_jpm(const MapSpec& m, double b_plus, double b_minus, double s_plus,
                       double s_minus) {
  if (!(s_plus > 0.0) || !(s_minus > 0.0))
    throw std::domain_error("upper_bound_jpm: growth rates must be positive");
  if (!(b_plus < 0.0) || !(b_minus < 0.0))
    throw std::domain_error("upper_bound_jpm: t=1 pressure is nonnegative (hyperbolicity "
                            "hypothesis failed)");
  return 2.0 * m.n() + std::max(b_plus / s_plus, b_minus / s_minus);
}

HyperbolicityDiagnostic hyperbolicity_heuristic(const MapSpec& m, const std::vector<CPoint>& samples,
                                                const HyperbolicityOptions& opts) {
  if (opts.k < 1) throw std::invalid_argument("hyperbolicity_heuristic: k must be >= 1");
  const int n = m.n();
  HyperbolicityDiagnostic diag;
  if (samples.empty()) return diag;

  struct OrbitGap {
    bool dropped = true;
    int index = -1;
    double gap = 0.0;
  };
  std::vector<OrbitGap> gaps(samples.size());
  parallel_for(samples.size(), opts.workers, [&](size_t i) {
    CPoint q = samples[i];
    CMatrix M = CMatrix::Identity(n, n);
    for (int s = 0; s < opts.k; ++s) {
      if (q.escaped || !all_finite(q)) return;
      M = m.jacobian(q) * M;
      q = m.eval_forward(q);
      double mm = 0.0;
      for (Eigen::Index r = 0; r < M.rows(); ++r)
        for (Eigen::Index c = 0; c < M.cols(); ++c) mm = std::max(mm, std::abs(M(r, c)));
      if (!(mm > 0.0) || !std::isfinite(mm)) return;
      M /= mm;  // gap ratios are scale-invariant
    }
    Eigen::JacobiSVD<CMatrix> svd(M);
    const auto& sv = svd.singularValues();
    OrbitGap g;
    g.dropped = false;
    for (int j = 0; j + 1 < n; ++j) {
      const double ratio = sv(j + 1) > 0.0 ? sv(j) / sv(j + 1)
                                           : std::numeric_limits<double>::infinity();
      if (ratio > g.gap) {
        g.gap = ratio;
        g.index = j + 1;  // complex dimensions above the split
      }
    }
    gaps[i] = g;
  });

  diag.worst_gap = std::numeric_limits<double>::infinity();
  int index = -2;  // -2 = unset, -1 = inconsistent
  for (const OrbitGap& g : gaps) {
    if (g.dropped) {
      ++diag.dropped;
      continue;
    }
    ++diag.orbits_checked;
    diag.worst_gap = std::min(diag.worst_gap, g.gap);
    if (g.gap < opts.min_gap) ++diag.orbits_failed;
    if (index == -2)
      index = g.index;
    else if (index != g.index)
      index = -1;
  }
  if (diag.orbits_checked == 0) {
    diag.worst_gap = 0.0;
    return diag;
  }
  diag.index = index >= 0 ? index : -1;
  diag.pass = diag.orbits_failed == 0 && index >= 1;
  return diag;
}

}  // namespace regal
