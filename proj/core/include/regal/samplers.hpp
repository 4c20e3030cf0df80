#pragma once
// Point-set builders for the dimension pipeline: saddle periodic clouds
// (J proxy), escape-boundary bisection (J^+ proxy), and unstable-manifold
// sprays (K^-/J^- proxy).

#include <cstdint>
#include <vector>

#include "regal/filtration.hpp"
#include "regal/map.hpp"
#include "regal/orbit.hpp"
#include "regal/types.hpp"

namespace regal {

// Distinct saddle periodic points of period <= k_max (union of censuses,
// deduplicated, lexicographically sorted).
std::vector<CPoint> sample_saddles(const MapSpec& m, int k_max, const std::vector<CPoint>& seeds,
                                   const NewtonOptions& opts);

struct BoundaryOptions {
  GridWindow window;
  int lines = 64;         // vertical scan lines
  int cells = 256;        // probe cells per line
  int budget = 200;       // escape-test iteration budget
  double big_radius = 1e10;
  double tol = 1e-12;     // refinement width on the segment
  int accept_time = 18;   // minimum escape time of a kept point
  int workers = 1;
};

// Escape-time refinement along vertical grid lines of the real (x, y) slice.
// K^+ has empty interior for these maps, so a bounded/escaping sign change
// may never appear on a finite grid; the escape time still peaks on K^+.
// Cells whose endpoints disagree in escape time are narrowed onto the
// slowest-escaping subinterval; a refined point is kept when its escape time
// reaches accept_time (distance to K^+ shrinks like lambda^-time). Error when
// no crossing is found anywhere.
std::vector<CPoint> sample_boundary(const MapSpec& m, const BoundaryOptions& opts);

struct SprayOptions {
  int rays = 64;            // directions e^{i theta} around the saddle
  int radii = 12;           // log-spaced offsets per ray
  double r_min = 1e-6, r_max = 1e-3;
  int forward_iters = 24;   // iterates collected per spray point
  int settle_iters = 0;     // iterates discarded before collecting
  uint64_t seed = 1;        // reserved for jittered variants
  int workers = 1;
};

// Seeds complex offsets along the leading unstable eigenvector of a saddle
// and pushes them forward, keeping iterates that stay in V: a sample of the
// unstable manifold's sweep through V (subset of K^- up to spray error).
std::vector<CPoint> sample_unstable_spray(const MapSpec& m, const FiltrationSpec& fs,
                                          const PeriodicOrbit& saddle, const SprayOptions& opts);

// Deduplicate a cloud on a lattice of the given radius (lex sort + merge).
std::vector<CPoint> dedupe_cloud(std::vector<CPoint> pts, double radius);

}  // namespace regal
