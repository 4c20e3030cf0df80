#pragma once
// Box-counting dimension estimates for point clouds in R^D and 2D
// indicator sets, with dyadic scale ladders and windowed log-log fits.

#include <functional>
#include <string>
#include <vector>

#include "regal/types.hpp"

namespace regal {

// Flat point-major storage of a cloud in R^dim.
struct PointCloud {
  int dim = 0;
  std::vector<double> coords;  // size = dim * count

  size_t size() const { return dim > 0 ? coords.size() / static_cast<size_t>(dim) : 0; }
  double at(size_t i, int d) const { return coords[i * static_cast<size_t>(dim) + d]; }
};

// C^n points -> R^{2n} (re, im interleaved per coordinate).
PointCloud cloud_from_cpoints(const std::vector<CPoint>& pts);

struct BoxCountOptions {
  int coarse_level = 3;  // epsilon_j = diameter * 2^-j, j = coarse..fine
  int fine_level = 9;
  // Fit window as inclusive indices into the scale ladder; -1 means the
  // default (drop the outermost scale at each end when >= 5 scales).
  int fit_lo = -1;
  int fit_hi = -1;
};

struct BoxCountResult {
  std::string target;
  int ambient_dim = 0;
  std::vector<double> scales;     // epsilon_j, absolute lengths, decreasing
  std::vector<long long> counts;  // N(epsilon_j), nondecreasing
  double slope = 0.0;             // fitted log N vs log(1/eps), clamped to [0, dim]
  double residual = 0.0;          // max |fit - data| over the fit window
  int fit_lo = 0, fit_hi = 0;
};

// Counts occupied boxes of the window at each scale via sparse hashing of
// packed cell indices; needs at least 3 scales and a nonempty cloud.
BoxCountResult box_dimension(const PointCloud& cloud, const std::vector<double>& window_lo,
                             const std::vector<double>& window_hi, const BoxCountOptions& opts,
                             const std::string& target);

// Window taken from the cloud's bounding box, padded by 1% per side.
BoxCountResult box_dimension(const PointCloud& cloud, const BoxCountOptions& opts,
                             const std::string& target);

// 2D indicator variant: a cell counts as occupied when the indicator is true
// at its center.
BoxCountResult box_dimension_indicator(const std::function<bool(double, double)>& indicator,
                                       double x0, double x1, double y0, double y1,
                                       const BoxCountOptions& opts, const std::string& target);

}  // namespace regal
