#pragma once
// Exponential growth rates s^± of max ||Df^{±k}|| over sample sets, via
// renormalized cocycle products.

#include <functional>
#include <string>
#include <vector>

#include "regal/filtration.hpp"
#include "regal/map.hpp"
#include "regal/types.hpp"

namespace regal {

struct GrowthRate {
  int direction = +1;  // +1 forward, -1 backward
  // (k, s_k = (1/k) log max ||Df^{±k}||), max over the samples still inside
  // the domain at depth k. Ends at the deepest k any sample reached, which
  // may fall short of the requested k_max when every orbit drifts out first.
  std::vector<std::pair<int, double>> per_k;
  double s = 0.0;  // extrapolated limit
  std::string sample_descriptor;
  int samples_used = 0;  // samples contributing at least the k = 1 entry
  int dropped = 0;       // samples that left the domain before the first step
};

// Generic cocycle driver: step advances the base point, jac supplies the
// one-step derivative at the current point, in_domain gates the orbit.
// Products renormalize every step (factor out the max entry modulus,
// accumulate its log) so k-step norms never overflow.
GrowthRate growth_rate_generic(const std::function<CPoint(const CPoint&)>& step,
                               const std::function<CMatrix(const CPoint&)>& jac,
                               const std::function<bool(const CPoint&)>& in_domain,
                               const std::vector<CPoint>& samples, int k_max, int direction,
                               int workers, const std::string& descriptor);

// s^+ (direction +1) or s^- (direction -1) for a regular map; each sample
// contributes for as long as its orbit stays in V.
GrowthRate growth_rate(const MapSpec& m, const FiltrationSpec& fs,
                       const std::vector<CPoint>& samples, int k_max, int direction, int workers,
                       const std::string& descriptor);

// log ||Df^{±k}(p)|| (operator 2-norm) via the renormalized product.
double log_cocycle_norm(const MapSpec& m, const CPoint& p, int k, int direction);

}  // namespace regal
