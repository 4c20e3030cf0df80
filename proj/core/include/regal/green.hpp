#pragma once
// Escape-rate Green functions G^+ / G^- and a Hölder-exponent diagnostic
// along transversal segments.

#include <vector>

#include "regal/map.hpp"
#include "regal/types.hpp"

namespace regal {

struct GreenOptions {
  double big_radius = 1e10;  // stop once the max-coordinate norm exceeds this
  int budget = 200;
};

struct GreenEval {
  double value = 0.0;        // >= 0; 0 whenever the orbit stayed bounded
  int k = 0;                 // truncation index (first iterate past big_radius)
  bool escaped = false;      // orbit passed big_radius within the budget
  bool budget_limited = false;
  double trunc_error = 0.0;  // geometric tail bound |G_{k+1} - G_k| / (d - 1)
};

// G^+(p) = lim d^{-k} log^+ |f^k(p)|: iterate until the norm passes
// big_radius, then refine by one extra iterate (the refined value makes the
// functional equation G^+(f p) = d G^+(p) hold to rounding).
GreenEval green_plus(const MapSpec& m, const CPoint& p, const GreenOptions& opts = {});
// Same under f^{-1} with degree d^-.
GreenEval green_minus(const MapSpec& m, const CPoint& p, const GreenOptions& opts = {});

struct HolderFit {
  double exponent = 0.0;    // fitted slope of log G^+ vs log(distance)
  double fit_residual = 0.0; // max |fit - data| over the samples
  double boundary_t = 0.0;   // segment parameter of the located boundary point
  std::vector<std::pair<double, double>> samples;  // (log dist, log G^+)
};

// Bisects the segment p0 -> p1 to the K^+ boundary (requires G^+(p0) = 0 and
// G^+(p1) > 0, else std::invalid_argument) and fits the decay exponent of
// G^+ against the distance to the boundary over dyadic sample distances.
HolderFit holder_exponent_estimate(const MapSpec& m, const CPoint& p0, const CPoint& p1,
                                   int levels = 20, const GreenOptions& opts = {});

}  // namespace regal
