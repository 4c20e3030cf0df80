#include "regal/samplers.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "regal/parallel.hpp"

namespace regal {

std::vector<CPoint> dedupe_cloud(std::vector<CPoint> pts, double radius) {
  std::sort(pts.begin(), pts.end(), lex_less);
  std::vector<CPoint> out;
  for (CPoint& c : pts) {
    bool merged = false;
    for (auto it = out.rbegin(); it != out.rend(); ++it) {
      if (c.z[0].real() - it->z[0].real() > radius) break;
      if (dist_inf(*it, c) <= radius) {
        merged = true;
        break;
      }
    }
    if (!merged) out.push_back(std::move(c));
  }
  return out;
}

std::vector<CPoint> sample_saddles(const MapSpec& m, int k_max, const std::vector<CPoint>& seeds,
                                   const NewtonOptions& opts) {
  if (k_max < 1) throw std::invalid_argument("sample_saddles: k_max must be >= 1");
  std::vector<CPoint> cloud;
  for (int k = 1; k <= k_max; ++k) {
    const PeriodicCensus census = find_periodic_points(m, k, seeds, opts);
    for (const PeriodicOrbit& c : census.cycles)
      if (c.stability == Stability::Saddle)
        cloud.insert(cloud.end(), c.points.begin(), c.points.end());
  }
  cloud = dedupe_cloud(std::move(cloud), opts.dedupe_radius);
  if (cloud.empty()) throw std::runtime_error("sample_saddles: no saddle periodic points found");
  return cloud;
}

namespace {

// Steps until the forward orbit passes big_radius; budget + 1 when it never
// does (effectively bounded at this budget).
int escape_time(const MapSpec& m, const CPoint& p, int budget, double big_radius) {
  CPoint q = p;
  for (int k = 0; k <= budget; ++k) {
    if (q.escaped || !all_finite(q) || norm_inf(q) > big_radius) return k;
    q = m.eval_forward(q);
  }
  return budget + 1;
}

CPoint real_xy(const MapSpec& m, double x, double y) {
  CPoint p;
  p.z.assign(static_cast<size_t>(m.n()), Cplx(0.0, 0.0));
  p.z[0] = Cplx(x, 0.0);
  p.z[1] = Cplx(y, 0.0);
  return p;
}

}  // namespace

std::vector<CPoint> sample_boundary(const MapSpec& m, const BoundaryOptions& opts) {
  if (opts.lines < 1 || opts.cells < 2) throw std::invalid_argument("sample_boundary: bad grid");
  if (m.n() < 2) throw std::invalid_argument("sample_boundary: needs n >= 2");
  const GridWindow& w = opts.window;
  const double dy = (w.y1 - w.y0) / opts.cells;
  const int accept_time = std::min(opts.budget, opts.accept_time);

  std::vector<std::vector<CPoint>> per_line(static_cast<size_t>(opts.lines));
  parallel_for(static_cast<size_t>(opts.lines), opts.workers, [&](size_t li) {
    const double x =
        opts.lines == 1 ? 0.5 * (w.x0 + w.x1)
                        : w.x0 + (w.x1 - w.x0) * static_cast<double>(li) / (opts.lines - 1);
    const auto t_at = [&](double y) {
      return escape_time(m, real_xy(m, x, y), opts.budget, opts.big_radius);
    };
    std::vector<int> t(static_cast<size_t>(opts.cells + 1));
    for (int c = 0; c <= opts.cells; ++c) t[static_cast<size_t>(c)] = t_at(w.y0 + c * dy);
    for (int c = 0; c < opts.cells; ++c) {
      const int tl = t[static_cast<size_t>(c)], tr = t[static_cast<size_t>(c + 1)];
      if (tl == tr && tl <= opts.budget) continue;  // no escape-time contrast
      // Narrow onto the slowest-escaping subinterval: a 9-probe rescan keeps
      // the two subcells around the maximum, shrinking the width 4x per round.
      double ylo = w.y0 + c * dy, yhi = ylo + dy;
      double best_y = tl >= tr ? ylo : yhi;
      int best_t = std::max(tl, tr);
      for (int round = 0; round < 60 && yhi - ylo > opts.tol; ++round) {
        constexpr int kProbes = 8;
        const double h = (yhi - ylo) / kProbes;
        int bi = 0, bt = -1;
        for (int i = 0; i <= kProbes; ++i) {
          const int ti = t_at(ylo + i * h);
          if (ti > bt) {
            bt = ti;
            bi = i;
          }
        }
        if (bt > best_t) {
          best_t = bt;
          best_y = ylo + bi * h;
        }
        const double nlo = ylo + std::max(0, bi - 1) * h;
        const double nhi = ylo + std::min(kProbes, bi + 1) * h;
        ylo = nlo;
        yhi = nhi;
        if (best_t > opts.budget) break;  // pinned a bounded-at-budget point
      }
      if (best_t >= accept_time) per_line[li].push_back(real_xy(m, x, best_y));
    }
  });

  std::vector<CPoint> out;
  for (const auto& line : per_line) out.insert(out.end(), line.begin(), line.end());
  out = dedupe_cloud(std::move(out), 4.0 * std::max(opts.tol, 1e-10));
  if (out.empty()) throw std::runtime_error("sample_boundary: no escape boundary crossings found");
  return out;
}

std::vector<CPoint> sample_unstable_spray(const MapSpec& m, const FiltrationSpec& fs,
                                          const PeriodicOrbit& saddle, const SprayOptions& opts) {
  if (saddle.unstable_index < 1)
    throw std::invalid_argument("sample_unstable_spray: orbit has no unstable direction");
  if (opts.rays < 1 || opts.radii < 1 || !(opts.r_max >= opts.r_min) || !(opts.r_min > 0.0))
    throw std::invalid_argument("sample_unstable_spray: bad spray geometry");
  const int n = m.n();
  const CPoint& rep = saddle.representative();

  // Leading unstable eigenvector of Df^period at the representative; phase
  // fixed by making the largest-modulus entry real positive.
  CMatrix J = CMatrix::Identity(n, n);
  CPoint q = rep;
  for (int s = 0; s < saddle.period; ++s) {
    J = m.jacobian(q) * J;
    q = m.eval_forward(q);
  }
  Eigen::ComplexEigenSolver<CMatrix> es(J, /*computeEigenvectors=*/true);
  int lead = 0;
  for (int i = 1; i < n; ++i)
    if (std::abs(es.eigenvalues()(i)) > std::abs(es.eigenvalues()(lead))) lead = i;
  if (std::abs(es.eigenvalues()(lead)) <= 1.0)
    throw std::runtime_error("sample_unstable_spray: leading multiplier not expanding");
  Eigen::Matrix<Cplx, Eigen::Dynamic, 1> v = es.eigenvectors().col(lead);
  int big = 0;
  for (int i = 1; i < n; ++i)
    if (std::abs(v(i)) > std::abs(v(big))) big = i;
  v /= v(big);
  v /= v.norm();

  const size_t nseeds = static_cast<size_t>(opts.rays) * static_cast<size_t>(opts.radii);
  std::vector<std::vector<CPoint>> per_seed(nseeds);
  parallel_for(nseeds, opts.workers, [&](size_t si) {
    const int ray = static_cast<int>(si) / opts.radii;
    const int ri = static_cast<int>(si) % opts.radii;
    const double theta = 2.0 * std::numbers::pi * ray / opts.rays;
    const double r =
        opts.radii == 1
            ? opts.r_min
            : opts.r_min * std::pow(opts.r_max / opts.r_min, static_cast<double>(ri) / (opts.radii - 1));
    const Cplx offset = r * Cplx(std::cos(theta), std::sin(theta));
    CPoint p = rep;
    for (int c = 0; c < n; ++c) p.z[static_cast<size_t>(c)] += offset * v(c);
    for (int it = 0; it < opts.settle_iters + opts.forward_iters; ++it) {
      p = m.eval_forward(p);
      if (p.escaped || !all_finite(p)) break;
      if (fs.classify(p) != Region::V) continue;  // outside V: skip but keep iterating
      if (it >= opts.settle_iters) per_seed[si].push_back(p);
    }
  });

  std::vector<CPoint> out;
  for (const auto& chunk : per_seed) out.insert(out.end(), chunk.begin(), chunk.end());
  if (out.empty()) throw std::runtime_error("sample_unstable_spray: no iterates stayed in V");
  return out;
}

}  // namespace regal
