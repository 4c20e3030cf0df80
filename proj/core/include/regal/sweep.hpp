#pragma once
// Parameter sweeps of the Bowen-Ruelle roots and box dimension along a path
// in parameter space, with smoothness diagnostics.

#include <functional>
#include <string>
#include <vector>

#include "regal/boxcount.hpp"
#include "regal/orbit.hpp"
#include "regal/thermo.hpp"

namespace regal {

struct SweepOptions {
  int k_root = 6;          // census depth for the roots
  int k_cloud = 8;         // saddle-cloud depth for the box dimension
  NewtonOptions newton;
  HyperbolicityOptions hyper;
  BoxCountOptions box;
  double jump_tol = 0.05;  // adjacent-step jump threshold on t^u
  double bracket_hi = 2.0;
};

struct SweepStep {
  double param = 0.0;
  double t_u = std::numeric_limits<double>::quiet_NaN();
  double t_s = std::numeric_limits<double>::quiet_NaN();
  double boxdim_J = std::numeric_limits<double>::quiet_NaN();
  bool hyperbolic = false;
  bool flagged = false;   // failed diagnostic or jump above jump_tol
  std::string note;
};

struct SweepResult {
  std::vector<SweepStep> steps;
  double max_jump = 0.0;         // max |t^u_i - t^u_{i-1}| over valid pairs
  double max_second_diff = 0.0;  // smoothness proxy on t^u
  bool smooth = true;            // no jump exceeded jump_tol
};

// Runs census -> hyperbolicity heuristic -> t^u/t^s roots -> boxdim(J) at
// each parameter; steps whose diagnostic or bracket fails are flagged and the
// sweep continues.
SweepResult dimension_sweep(const std::function<MapSpec(double)>& family,
                            const std::vector<double>& params,
                            const std::vector<CPoint>& seeds, const SweepOptions& opts);

}  // namespace regal
