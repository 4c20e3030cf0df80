#pragma once
// Assembles measured box dimensions, growth rates, and thermodynamic outputs
// into the dimension-bound report with per-bound hypothesis flags.

#include <limits>
#include <string>
#include <vector>

#include "regal/map.hpp"

namespace regal {

struct Bound {
  std::string name;
  double value = 0.0;
  bool emitted = false;  // hypothesis satisfied and inputs available
  std::string hypothesis;
};

struct ConsistencyCheck {
  std::string name;
  bool pass = false;
  bool applicable = false;
  double lhs = 0.0, rhs = 0.0;  // check is lhs <= rhs + tolerance
};

struct DimensionInputs {
  // Measured box-counting slopes (NaN = not measured).
  double boxdim_J = std::numeric_limits<double>::quiet_NaN();
  double boxdim_K = std::numeric_limits<double>::quiet_NaN();
  double boxdim_Kminus = std::numeric_limits<double>::quiet_NaN();
  double boxdim_Jplus = std::numeric_limits<double>::quiet_NaN();
  double boxdim_Jminus = std::numeric_limits<double>::quiet_NaN();
  // Growth rates (required, > 0).
  double s_plus = 0.0;
  double s_minus = 0.0;
  // t = 1 pressures (NaN = unavailable).
  double b_plus = std::numeric_limits<double>::quiet_NaN();
  double b_minus = std::numeric_limits<double>::quiet_NaN();
  bool hyperbolic = false;  // heuristic verdict
};

struct DimensionReport {
  DimensionInputs inputs;
  Bound upper_Kminus;   // 2n + 2 log|det Df| / s^-   [volume-decreasing]
  Bound lower_J;        // l log d / min(s^+, s^-)    [hyperbolic heuristic]
  Bound lower_Jplus;    // 2n - 2 + log d / s^+       [dim I^- = 0]
  Bound upper_Jpm;      // 2n + max(b^±/s^±)          [hyperbolic heuristic]
  Bound measure_lower;  // l log d (1/s^+ + 1/s^-)    [hyperbolic heuristic]
  std::vector<ConsistencyCheck> checks;
  double tolerance = 0.1;

  bool all_applicable_pass() const;
};

// Emits each bound only when its hypothesis holds for the map; consistency
// checks compare measured slopes against the emitted bounds with the given
// tolerance and are marked not-applicable when either side is missing.
DimensionReport bound_report(const MapSpec& m, const DimensionInputs& in, double tolerance = 0.1);

}  // namespace regal
