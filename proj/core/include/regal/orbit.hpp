#pragma once
// Orbit classification against the filtration, Newton-based periodic-orbit
// census, attracting-cycle discovery, and basin grids.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "regal/filtration.hpp"
#include "regal/map.hpp"
#include "regal/types.hpp"

namespace regal {

enum class Verdict {
  EscapesForward,
  EscapesBackward,
  ConvergesToCycle,
  BoundedNonAttracted,
  Undecided
};

std::string verdict_name(Verdict v);

enum class Stability { Attracting, Saddle, Repelling, Indeterminate };

std::string stability_name(Stability s);

struct PeriodicOrbit {
  int period = 0;                  // minimal period
  std::vector<CPoint> points;      // cycle starting at the canonical representative
  std::vector<Cplx> multipliers;   // eigenvalues of Df^period at the rep, |.| descending
  Stability stability = Stability::Indeterminate;
  int unstable_index = 0;          // #{ |lambda| > 1 + unit_tol }
  double residual = 0.0;           // |f^k(rep) - rep| at the census level k

  const CPoint& representative() const { return points.front(); }
};

struct PeriodicCensus {
  int k = 0;                            // census level: fixed points of f^k
  std::vector<PeriodicOrbit> cycles;    // sorted by (period, canonical rep)
  long long fixed_point_count = 0;      // distinct fixed points of f^k found
  long long saddle_fixed_point_count = 0;
  long long seeds = 0;
  long long converged_seeds = 0;
};

struct NewtonOptions {
  double residual_tol = 1e-10;
  int max_iter = 60;
  double dedupe_radius = 1e-6;
  double diverge_norm = 1e8;  // abandon seeds wandering beyond this norm
  double unit_tol = 1e-4;     // unit-circle band for multiplier classification
  int workers = 1;
};

// Real (x, y) grid over [-R, R]^2 embedded in C^2 (n = 2 only).
std::vector<CPoint> grid_seeds(double R, int per_axis);
// Complex seeds uniform in the polydisk-box [-R, R]^{2n}, counter-based.
std::vector<CPoint> random_seeds(int n, double R, int count, uint64_t seed,
                                 uint64_t stream = 17);

// Newton's method on g(z) = f^k(z) - z with Jacobian Df^k - I from every
// seed; converged roots are deduplicated within dedupe_radius by a
// deterministic sequential merge of lexicographically sorted candidates and
// grouped into cycles (orbit members missed by the seeds are recovered by
// iterating and re-polishing, so every reported cycle is complete).
// Single-stage Hénon compositions additionally get a structure-aware wave:
// period-k orbits of the decoupled recurrence y' = p(y) are continued in the
// coupling parameter a with whole-orbit Newton, which recovers cycles whose
// pointwise Newton basins are too small for any reasonable seed density.
PeriodicCensus find_periodic_points(const MapSpec& m, int k, const std::vector<CPoint>& seeds,
                                    const NewtonOptions& opts);

// Censuses at levels 1..k_max deduplicated into the distinct attracting
// cycles, sorted by (period, representative).
std::vector<PeriodicOrbit> find_attracting_cycles(const MapSpec& m, int k_max,
                                                  const std::vector<CPoint>& seeds,
                                                  const NewtonOptions& opts);

struct ClassifyOptions {
  int budget = 2000;
  double attract_tol = 1e-6;
  int attract_streak = 10;  // consecutive contracting steps required
};

struct OrbitClass {
  Verdict verdict = Verdict::Undecided;
  int steps = 0;     // step at which the verdict fired (budget if none)
  int cycle_id = -1; // index into the registered cycle list
};

// Exactly one verdict per point:
//   EscapesForward(k)      forward iterate k entered Vminus (or overflowed)
//   ConvergesToCycle(c,k)  distance to cycle c below attract_tol for
//                          attract_streak consecutive contracting steps
//   BoundedNonAttracted    never entered Vminus, never attracted, final
//                          iterate in V (J-shadowing proxy)
//   EscapesBackward(k)     otherwise, backward iterate k entered Vplus
//   Undecided              budget exhausted in transit
// Re-running with a larger budget can only upgrade BoundedNonAttracted or
// Undecided; fired verdicts are stable.
OrbitClass classify_point(const MapSpec& m, const FiltrationSpec& fs,
                          const std::vector<PeriodicOrbit>& cycles, const CPoint& p,
                          const ClassifyOptions& opts);

struct GridWindow {
  double x0 = -2, x1 = 2, y0 = -2, y1 = 2;
};

struct BasinGrid {
  GridWindow window;
  int nx = 0, ny = 0;
  // Row-major with row 0 at the top of the window (y = y1), matching the
  // graymap convention.
  std::vector<OrbitClass> cells;

  const OrbitClass& at(int row, int col) const { return cells[row * nx + col]; }
};

// Classifies the real (x, y) slice grid; coordinates beyond the first two
// (n = 3) are pinned to `slice_rest`.
BasinGrid basin_map(const MapSpec& m, const FiltrationSpec& fs,
                    const std::vector<PeriodicOrbit>& cycles, const GridWindow& window, int nx,
                    int ny, const ClassifyOptions& opts, int workers,
                    const std::vector<Cplx>& slice_rest = {});

}  // namespace regal
