#include "regal/orbit.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "regal/parallel.hpp"
#include "regal/rng.hpp"

namespace regal {

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::EscapesForward: return "escapes_forward";
    case Verdict::EscapesBackward: return "escapes_backward";
    case Verdict::ConvergesToCycle: return "converges_to_cycle";
    case Verdict::BoundedNonAttracted: return "bounded_non_attracted";
    case Verdict::Undecided: return "undecided";
  }
  return "undecided";
}

std::string stability_name(Stability s) {
  switch (s) {
    case Stability::Attracting: return "attracting";
    case Stability::Saddle: return "saddle";
    case Stability::Repelling: return "repelling";
    case Stability::Indeterminate: return "indeterminate";
  }
  return "indeterminate";
}

std::vector<CPoint> grid_seeds(double R, int per_axis) {
  if (per_axis < 2) throw std::invalid_argument("grid_seeds: per_axis must be >= 2");
  std::vector<CPoint> out;
  out.reserve(static_cast<size_t>(per_axis) * per_axis);
  for (int i = 0; i < per_axis; ++i) {
    const double x = -R + 2.0 * R * i / (per_axis - 1);
    for (int j = 0; j < per_axis; ++j) {
      const double y = -R + 2.0 * R * j / (per_axis - 1);
      CPoint p;
      p.z = {Cplx(x, 0.0), Cplx(y, 0.0)};
      out.push_back(std::move(p));
    }
  }
  return out;
}

std::vector<CPoint> random_seeds(int n, double R, int count, uint64_t seed, uint64_t stream) {
  if (n < 1 || count < 0) throw std::invalid_argument("random_seeds: bad arguments");
  CounterRng rng(seed, stream);
  std::vector<CPoint> out;
  out.reserve(static_cast<size_t>(count));
  for (int i = 0; i < count; ++i) {
    CPoint p;
    p.z.resize(static_cast<size_t>(n));
    const uint64_t base = static_cast<uint64_t>(i) * 2ull * static_cast<uint64_t>(n);
    for (int c = 0; c < n; ++c) {
      const double re = rng.uniform(-R, R, base + 2 * static_cast<uint64_t>(c));
      const double im = rng.uniform(-R, R, base + 2 * static_cast<uint64_t>(c) + 1);
      p.z[static_cast<size_t>(c)] = Cplx(re, im);
    }
    out.push_back(std::move(p));
  }
  return out;
}

namespace {

using CVector = Eigen::Matrix<Cplx, Eigen::Dynamic, 1>;

bool finite(const CVector& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (!std::isfinite(v[i].real()) || !std::isfinite(v[i].imag())) return false;
  return true;
}

// One Newton solve for g(z) = f^k(z) - z from a seed; nullopt when the
// iteration escapes, stalls, or fails to reach the residual tolerance.
std::optional<CPoint> newton_solve(const MapSpec& m, int k, CPoint z, const NewtonOptions& opts) {
  const int n = m.n();
  for (int it = 0; it < opts.max_iter; ++it) {
    if (z.escaped || !all_finite(z) || norm_inf(z) > opts.diverge_norm) return std::nullopt;
    // Chain rule along the orbit: J = Df(f^{k-1} z) ... Df(z).
    CMatrix J = CMatrix::Identity(n, n);
    CPoint q = z;
    double scale = 1.0 + norm_inf(z);
    for (int s = 0; s < k; ++s) {
      if (q.escaped || norm_inf(q) > opts.diverge_norm) return std::nullopt;
      scale = std::max(scale, 1.0 + norm_inf(q));
      J = m.jacobian(q) * J;
      q = m.eval_forward(q);
    }
    if (q.escaped || !all_finite(q)) return std::nullopt;
    scale = std::max(scale, 1.0 + norm_inf(q));
    CVector g(n);
    for (int c = 0; c < n; ++c) g[c] = q.z[static_cast<size_t>(c)] - z.z[static_cast<size_t>(c)];
    double res = 0.0;
    for (int c = 0; c < n; ++c) res = std::max(res, std::abs(g[c]));
    // Rounding injected at each orbit step is amplified by the tail of the
    // cocycle, so the computed k-step residual of an exact root floors at
    // about eps * orbit_scale * ||Df^k||. On strongly expanding orbits that
    // floor exceeds any fixed tolerance; below it the residual carries no
    // information, so accept once the measured value is floor-level. The
    // floor relaxation is capped well inside the dedupe resolution: an
    // orbit whose floor exceeds the cap is not resolvable as a root in
    // double precision at this depth, and accepting it would let bounded
    // non-periodic wanderers (whose cocycles are enormous) pass as roots.
    const double attainable = 8.0 * std::numeric_limits<double>::epsilon() * scale *
                              J.cwiseAbs().maxCoeff();
    const double accept_tol =
        std::max(opts.residual_tol, std::min(attainable, 0.01 * opts.dedupe_radius));
    if (res < accept_tol) return z;
    CMatrix A = J - CMatrix::Identity(n, n);
    CVector d = A.partialPivLu().solve(-g);
    if (!finite(d)) return std::nullopt;
    for (int c = 0; c < n; ++c) z.z[static_cast<size_t>(c)] += d[c];
  }
  return std::nullopt;
}

double orbit_residual(const MapSpec& m, int k, const CPoint& p) {
  const CPoint q = m.iterate(p, k);
  if (q.escaped) return std::numeric_limits<double>::infinity();
  return dist_inf(q, p);
}

// Roots of p(z) = target in a canonical (real, imag)-ascending order:
// closed form for degree <= 2, companion matrix above, plus a short scalar
// Newton polish either way.
std::vector<Cplx> poly_roots(const Poly1& p, Cplx target) {
  const int d = p.degree();
  std::vector<Cplx> c = p.coeffs();
  c[0] -= target;
  std::vector<Cplx> roots;
  if (d == 1) {
    roots.push_back(-c[0] / c[1]);
  } else if (d == 2) {
    const Cplx disc = std::sqrt(c[1] * c[1] - 4.0 * c[2] * c[0]);
    // Sign choice avoiding cancellation against c[1].
    const Cplx q = -0.5 * (c[1] + ((std::conj(c[1]) * disc).real() >= 0.0 ? disc : -disc));
    roots.push_back(std::abs(q) > 0.0 ? q / c[2] : Cplx(0.0));
    roots.push_back(std::abs(q) > 0.0 ? c[0] / q : Cplx(0.0));
  } else {
    CMatrix comp = CMatrix::Zero(d, d);
    for (int i = 0; i < d; ++i) comp(i, d - 1) = -c[static_cast<size_t>(i)] / c[static_cast<size_t>(d)];
    for (int i = 1; i < d; ++i) comp(i, i - 1) = Cplx(1.0);
    Eigen::ComplexEigenSolver<CMatrix> es(comp, /*computeEigenvectors=*/false);
    for (int i = 0; i < d; ++i) roots.push_back(es.eigenvalues()(i));
  }
  for (Cplx& r : roots)
    for (int it = 0; it < 2; ++it) {
      const Cplx pd = p.eval_deriv(r);
      if (!(std::abs(pd) > 0.0)) break;
      r -= (p.eval(r) - target) / pd;
    }
  std::sort(roots.begin(), roots.end(), [](const Cplx& a, const Cplx& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  return roots;
}

// Period-k orbits of the scalar recurrence y_{t+1} = p(y_t), one candidate
// per length-k word over the d inverse branches of p, found by backward
// (branch-wise) iteration. Words whose branch composition does not contract
// fail the residual check and are discarded. Enumeration is capped so deep
// periods cannot explode combinatorially.
std::vector<std::vector<Cplx>> chain_orbit_candidates(const Poly1& p, int k) {
  const int d = p.degree();
  if (std::pow(static_cast<double>(d), k) > 4096.0) return {};
  long long words = 1;
  for (int t = 0; t < k; ++t) words *= d;
  std::vector<std::vector<Cplx>> out;
  for (long long word = 0; word < words; ++word) {
    std::vector<Cplx> y(static_cast<size_t>(k), Cplx(0.0));
    std::vector<Cplx> ny(static_cast<size_t>(k));
    bool ok = true;
    for (int pass = 0; pass < 120 && ok; ++pass) {
      long long w = word;
      double moved = 0.0;
      for (int t = 0; t < k; ++t) {
        const std::vector<Cplx> roots = poly_roots(p, y[static_cast<size_t>((t + 1) % k)]);
        if (static_cast<int>(roots.size()) != d) {
          ok = false;
          break;
        }
        ny[static_cast<size_t>(t)] = roots[static_cast<size_t>(w % d)];
        w /= d;
        moved = std::max(moved, std::abs(ny[static_cast<size_t>(t)] - y[static_cast<size_t>(t)]));
      }
      if (!ok) break;
      y.swap(ny);
      if (moved < 1e-13) break;
    }
    if (!ok) continue;
    double res = 0.0;
    for (int t = 0; t < k; ++t)
      res = std::max(res, std::abs(p.eval(y[static_cast<size_t>(t)]) -
                                   y[static_cast<size_t>((t + 1) % k)]));
    if (res < 1e-8) out.push_back(std::move(y));
  }
  return out;
}

// Whole-orbit Newton on G(z_0..z_{k-1}) = (f(z_t) - z_{t+1 mod k})_t. The
// block system keeps its conditioning at O(||Df||) per step, so the
// convergence basin does not collapse with the period the way Newton on
// f^k - id does (whose Jacobian grows like the full k-step cocycle).
bool multiple_shooting_polish(const MapSpec& m, std::vector<CPoint>& orbit,
                              const NewtonOptions& opts) {
  const int n = m.n();
  const int k = static_cast<int>(orbit.size());
  const Eigen::Index N = static_cast<Eigen::Index>(n) * k;
  for (int it = 0; it < opts.max_iter; ++it) {
    CVector g(N);
    double res = 0.0;
    for (int t = 0; t < k; ++t) {
      const CPoint& zt = orbit[static_cast<size_t>(t)];
      if (zt.escaped || !all_finite(zt) || norm_inf(zt) > opts.diverge_norm) return false;
      const CPoint fq = m.eval_forward(zt);
      if (fq.escaped || !all_finite(fq)) return false;
      const CPoint& zn = orbit[static_cast<size_t>((t + 1) % k)];
      for (int c = 0; c < n; ++c) {
        g[t * n + c] = fq.z[static_cast<size_t>(c)] - zn.z[static_cast<size_t>(c)];
        res = std::max(res, std::abs(g[t * n + c]));
      }
    }
    if (res < opts.residual_tol) return true;
    CMatrix A = CMatrix::Zero(N, N);
    for (int t = 0; t < k; ++t) {
      A.block(t * n, t * n, n, n) = m.jacobian(orbit[static_cast<size_t>(t)]);
      const int u = ((t + 1) % k) * n;
      for (int c = 0; c < n; ++c) A(t * n + c, u + c) -= Cplx(1.0);
    }
    const CVector dz = A.partialPivLu().solve(-g);
    if (!finite(dz)) return false;
    for (int t = 0; t < k; ++t)
      for (int c = 0; c < n; ++c) orbit[static_cast<size_t>(t)].z[static_cast<size_t>(c)] += dz[t * n + c];
  }
  return false;
}

// Deduplicate lexicographically sorted candidates: a candidate joins the
// first retained representative within dedupe_radius (scan restricted to
// reps whose leading real part is within the radius).
std::vector<CPoint> dedupe_sorted(const std::vector<CPoint>& sorted, double radius) {
  std::vector<CPoint> reps;
  for (const CPoint& c : sorted) {
    bool merged = false;
    for (auto it = reps.rbegin(); it != reps.rend(); ++it) {
      if (c.z[0].real() - it->z[0].real() > radius) break;
      if (dist_inf(*it, c) <= radius) {
        merged = true;
        break;
      }
    }
    if (!merged) reps.push_back(c);
  }
  return reps;
}

int find_rep(const std::vector<CPoint>& reps, const CPoint& q, double radius) {
  for (size_t i = 0; i < reps.size(); ++i)
    if (dist_inf(reps[i], q) <= radius) return static_cast<int>(i);
  return -1;
}

bool modulus_desc(const Cplx& a, const Cplx& b) {
  const double ma = std::abs(a), mb = std::abs(b);
  if (ma != mb) return ma > mb;
  if (a.real() != b.real()) return a.real() > b.real();
  return a.imag() > b.imag();
}

std::vector<Cplx> cycle_multipliers(const MapSpec& m, const CPoint& rep, int period) {
  const int n = m.n();
  CMatrix Jf = CMatrix::Identity(n, n);
  std::vector<CPoint> orbit;
  orbit.reserve(static_cast<size_t>(period));
  CPoint q = rep;
  for (int s = 0; s < period; ++s) {
    orbit.push_back(q);
    Jf = m.jacobian(q) * Jf;
    q = m.eval_forward(q);
  }
  Eigen::ComplexEigenSolver<CMatrix> ef(Jf, /*computeEigenvectors=*/false);
  std::vector<Cplx> lf(ef.eigenvalues().data(), ef.eigenvalues().data() + n);
  std::sort(lf.begin(), lf.end(), modulus_desc);

  // The forward product resolves the expanding multipliers, but the
  // contracting ones sink below its rounding floor (~||Df^period|| * eps) at
  // strongly dissipative parameters and come back as noise or exact zeros.
  // Read them off the inverse cocycle instead, where those directions
  // dominate: (Df^period(rep))^{-1} = Dinv(f rep) Dinv(f^2 rep) ... Dinv(rep)
  // has eigenvalues 1/lambda_i with the former contracting ones on top.
  int n_u = 0;
  for (const Cplx& l : lf)
    if (std::abs(l) > 1.0) ++n_u;
  std::vector<Cplx> lam(lf.begin(), lf.begin() + n_u);
  if (n_u < n) {
    CMatrix Jb = CMatrix::Identity(n, n);
    for (int s = 1; s <= period; ++s)
      Jb = Jb * m.inverse_jacobian(orbit[static_cast<size_t>(s % period)]);
    Eigen::ComplexEigenSolver<CMatrix> eb(Jb, /*computeEigenvectors=*/false);
    std::vector<Cplx> lb(eb.eigenvalues().data(), eb.eigenvalues().data() + n);
    std::sort(lb.begin(), lb.end(), modulus_desc);
    for (int j = 0; j < n - n_u; ++j)
      lam.push_back(std::abs(lb[static_cast<size_t>(j)]) > 0.0
                        ? Cplx(1.0) / lb[static_cast<size_t>(j)]
                        : Cplx(0.0));
  }
  std::sort(lam.begin(), lam.end(), modulus_desc);
  return lam;
}

Stability classify_multipliers(const std::vector<Cplx>& lam, double unit_tol, int* unstable_index) {
  int above = 0, below = 0, band = 0;
  for (const Cplx& l : lam) {
    const double r = std::abs(l);
    if (r > 1.0 + unit_tol)
      ++above;
    else if (r < 1.0 - unit_tol)
      ++below;
    else
      ++band;
  }
  *unstable_index = above;
  if (band > 0) return Stability::Indeterminate;
  if (above == 0) return Stability::Attracting;
  if (below == 0) return Stability::Repelling;
  return Stability::Saddle;
}

bool orbit_less(const PeriodicOrbit& a, const PeriodicOrbit& b) {
  if (a.period != b.period) return a.period < b.period;
  return lex_less(a.representative(), b.representative());
}

}  // namespace

PeriodicCensus find_periodic_points(const MapSpec& m, int k, const std::vector<CPoint>& seeds,
                                    const NewtonOptions& opts) {
  if (k < 1) throw std::invalid_argument("find_periodic_points: k must be >= 1");
  PeriodicCensus census;
  census.k = k;
  census.seeds = static_cast<long long>(seeds.size());

  // Newton from every seed; slot-per-seed keeps the result independent of
  // the worker count.
  std::vector<std::optional<CPoint>> slots(seeds.size());
  parallel_for(seeds.size(), opts.workers,
               [&](size_t i) { slots[i] = newton_solve(m, k, seeds[i], opts); });

  std::vector<CPoint> candidates;
  for (const auto& s : slots)
    if (s) {
      ++census.converged_seeds;
      candidates.push_back(*s);
    }

  // Structure-aware wave for single-stage compositions: at coupling a = 0
  // the orbit recurrence decouples into y_{t+1} = p(y_t), whose period-k
  // orbits are branch words solvable by backward iteration. Each one is
  // continued in the coupling parameter up to the actual map with
  // whole-orbit Newton. Point seeds alone lose entire cycles at deep
  // periods because the basin of Newton on f^k - id shrinks with ||Df^k||.
  if (m.family() == Family::HenonComposition && m.stages().size() == 1) {
    const HenonStage& st = m.stages().front();
    const auto chains = chain_orbit_candidates(st.p, k);
    NewtonOptions ms_opts = opts;
    ms_opts.residual_tol = std::min(opts.residual_tol, 1e-13);
    std::vector<std::optional<CPoint>> chain_slots(chains.size());
    parallel_for(chains.size(), opts.workers, [&](size_t ci) {
      const std::vector<Cplx>& y = chains[ci];
      std::vector<CPoint> cur(static_cast<size_t>(k));
      for (int t = 0; t < k; ++t)
        cur[static_cast<size_t>(t)].z = {y[static_cast<size_t>((t - 1 + k) % k)],
                                         y[static_cast<size_t>(t)]};
      double s = 0.0, step = 0.25;
      while (s < 1.0) {
        const double s_next = std::min(1.0, s + step);
        const MapSpec ms = MapSpec::build_henon_composition({{st.p, st.a * s_next}});
        std::vector<CPoint> trial = cur;
        if (multiple_shooting_polish(ms, trial, ms_opts)) {
          cur.swap(trial);
          s = s_next;
          step = std::min(0.25, 2.0 * step);
        } else {
          step *= 0.5;
          if (step < 1.0 / 1024.0) return;  // continuation path lost
        }
      }
      // Land on the census convention (a root of f^k - id at residual_tol);
      // the whole-orbit solution is within ~1e-12 of it, so this converges
      // in a step or two when the orbit is genuinely periodic.
      chain_slots[ci] = newton_solve(m, k, cur.front(), opts);
    });
    for (const auto& s : chain_slots)
      if (s) candidates.push_back(*s);
  }

  std::sort(candidates.begin(), candidates.end(), lex_less);
  std::vector<CPoint> reps = dedupe_sorted(candidates, opts.dedupe_radius);

  // Group the roots of f^k into f-cycles, recovering members the seeds
  // missed by polishing the forward iterates.
  const double match_radius = 10.0 * opts.dedupe_radius;
  std::vector<char> visited(reps.size(), 0);
  std::vector<PeriodicOrbit> cycles;
  for (size_t r = 0; r < reps.size(); ++r) {
    if (visited[r]) continue;
    visited[r] = 1;
    std::vector<CPoint> orbit{reps[r]};
    int period = k;
    CPoint q = reps[r];
    for (int j = 1; j < k; ++j) {
      q = m.eval_forward(q);
      if (q.escaped) break;
      // Keep the polish only when it stayed local: a Newton hop onto some
      // other root would corrupt this orbit and mark the wrong rep visited.
      if (auto polished = newton_solve(m, k, q, opts))
        if (dist_inf(*polished, q) <= match_radius) q = *polished;
      if (dist_inf(q, reps[r]) <= match_radius) {
        period = j;
        break;
      }
      const int hit = find_rep(reps, q, match_radius);
      if (hit >= 0) visited[static_cast<size_t>(hit)] = 1;
      orbit.push_back(q);
    }

    PeriodicOrbit cyc;
    cyc.period = period;
    // Canonical representative: lexicographically smallest cycle point.
    size_t best = 0;
    for (size_t i = 1; i < orbit.size(); ++i)
      if (lex_less(orbit[i], orbit[best])) best = i;
    cyc.points.reserve(orbit.size());
    for (size_t i = 0; i < orbit.size(); ++i) cyc.points.push_back(orbit[(best + i) % orbit.size()]);
    cyc.residual = orbit_residual(m, k, cyc.points.front());
    cyc.multipliers = cycle_multipliers(m, cyc.points.front(), cyc.period);
    cyc.stability = classify_multipliers(cyc.multipliers, opts.unit_tol, &cyc.unstable_index);
    cycles.push_back(std::move(cyc));
  }

  std::sort(cycles.begin(), cycles.end(), orbit_less);
  for (const PeriodicOrbit& c : cycles) {
    census.fixed_point_count += c.period;
    if (c.stability == Stability::Saddle) census.saddle_fixed_point_count += c.period;
  }
  census.cycles = std::move(cycles);
  return census;
}

std::vector<PeriodicOrbit> find_attracting_cycles(const MapSpec& m, int k_max,
                                                  const std::vector<CPoint>& seeds,
                                                  const NewtonOptions& opts) {
  if (k_max < 1) throw std::invalid_argument("find_attracting_cycles: k_max must be >= 1");
  std::vector<PeriodicOrbit> found;
  for (int k = 1; k <= k_max; ++k) {
    PeriodicCensus census = find_periodic_points(m, k, seeds, opts);
    for (PeriodicOrbit& c : census.cycles) {
      if (c.stability != Stability::Attracting) continue;
      bool known = false;
      for (const PeriodicOrbit& old : found)
        if (old.period == c.period &&
            dist_inf(old.representative(), c.representative()) <= 10.0 * opts.dedupe_radius) {
          known = true;
          break;
        }
      if (!known) found.push_back(std::move(c));
    }
  }
  std::sort(found.begin(), found.end(), orbit_less);
  return found;
}

OrbitClass classify_point(const MapSpec& m, const FiltrationSpec& fs,
                          const std::vector<PeriodicOrbit>& cycles, const CPoint& p,
                          const ClassifyOptions& opts) {
  OrbitClass out;
  if (opts.budget < 1) return out;  // no iterations allowed: Undecided
  std::vector<double> prev_dist(cycles.size(), std::numeric_limits<double>::infinity());
  std::vector<int> streak(cycles.size(), 0);

  CPoint q = p;
  for (int step = 0;; ++step) {
    if (q.escaped || fs.classify(q) == Region::Vminus) {
      out.verdict = Verdict::EscapesForward;
      out.steps = step;
      return out;
    }
    for (size_t c = 0; c < cycles.size(); ++c) {
      double d = std::numeric_limits<double>::infinity();
      for (const CPoint& pt : cycles[c].points) d = std::min(d, dist_inf(q, pt));
      if (d < opts.attract_tol && d <= prev_dist[c]) {
        if (++streak[c] >= opts.attract_streak) {
          out.verdict = Verdict::ConvergesToCycle;
          out.steps = step;
          out.cycle_id = static_cast<int>(c);
          return out;
        }
      } else {
        streak[c] = 0;
      }
      prev_dist[c] = d;
    }
    if (step == opts.budget) break;
    q = m.eval_forward(q);
  }

  if (fs.classify(q) == Region::V) {
    out.verdict = Verdict::BoundedNonAttracted;
    out.steps = opts.budget;
    return out;
  }

  // Forward orbit parked in Vplus: resolve against the backward filtration.
  CPoint b = p;
  for (int step = 0; step <= opts.budget; ++step) {
    if (b.escaped || fs.classify(b) == Region::Vplus) {
      out.verdict = Verdict::EscapesBackward;
      out.steps = step;
      return out;
    }
    b = m.eval_inverse(b);
  }
  out.verdict = Verdict::Undecided;
  out.steps = opts.budget;
  return out;
}

BasinGrid basin_map(const MapSpec& m, const FiltrationSpec& fs,
                    const std::vector<PeriodicOrbit>& cycles, const GridWindow& window, int nx,
                    int ny, const ClassifyOptions& opts, int workers,
                    const std::vector<Cplx>& slice_rest) {
  if (nx < 1 || ny < 1) throw std::invalid_argument("basin_map: grid must be at least 1x1");
  if (2 + static_cast<int>(slice_rest.size()) != m.n())
    throw std::invalid_argument("basin_map: slice_rest must pin coordinates 3..n");
  BasinGrid grid;
  grid.window = window;
  grid.nx = nx;
  grid.ny = ny;
  grid.cells.resize(static_cast<size_t>(nx) * static_cast<size_t>(ny));
  const double dx = (window.x1 - window.x0) / nx;
  const double dy = (window.y1 - window.y0) / ny;
  parallel_for(grid.cells.size(), workers, [&](size_t idx) {
    const int row = static_cast<int>(idx) / nx;
    const int col = static_cast<int>(idx) % nx;
    CPoint p;
    p.z.resize(static_cast<size_t>(m.n()));
    p.z[0] = Cplx(window.x0 + (col + 0.5) * dx, 0.0);
    p.z[1] = Cplx(window.y1 - (row + 0.5) * dy, 0.0);  // row 0 at the top
    for (size_t c = 0; c < slice_rest.size(); ++c) p.z[2 + c] = slice_rest[c];
    grid.cells[idx] = classify_point(m, fs, cycles, p, opts);
  });
  return grid;
}

}  // namespace regal
