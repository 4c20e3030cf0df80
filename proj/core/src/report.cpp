#include "regal/report.hpp"

#include <cmath>
#include <stdexcept>

namespace regal {

bool DimensionReport::all_applicable_pass() const {
  for (const ConsistencyCheck& c : checks)
    if (c.applicable && !c.pass) return false;
  return true;
}

DimensionReport bound_report(const MapSpec& m, const DimensionInputs& in, double tolerance) {
  if (!(in.s_plus > 0.0) || !(in.s_minus > 0.0))
    throw std::invalid_argument("bound_report: growth rates must be positive");
  DimensionReport rep;
  rep.inputs = in;
  rep.tolerance = tolerance;
  const double two_n = 2.0 * m.n();
  const double logd = std::log(static_cast<double>(m.degree()));
  const double log_abs_delta = std::log(std::abs(m.det_df()));
  const bool volume_decreasing = std::abs(m.det_df()) < 1.0;
  const bool has_l = m.regularity_index().has_value();
  const double l = has_l ? static_cast<double>(*m.regularity_index()) : 0.0;
  const bool iminus_point = m.indeterminacy_minus().known && m.indeterminacy_minus().dim == 0;

  rep.upper_Kminus = {"upper_Kminus", two_n + 2.0 * log_abs_delta / in.s_minus, volume_decreasing,
                      "volume-decreasing (|det Df| < 1)"};
  rep.lower_J = {"lower_J", has_l ? l * logd / std::min(in.s_plus, in.s_minus) : 0.0,
                 has_l && in.hyperbolic, "hyperbolicity heuristic passed; integer l"};
  rep.lower_Jplus = {"lower_Jplus", two_n - 2.0 + logd / in.s_plus, iminus_point,
                     "dim I^- = 0"};
  const bool b_ok = std::isfinite(in.b_plus) && std::isfinite(in.b_minus) && in.b_plus < 0.0 &&
                    in.b_minus < 0.0;
  rep.upper_Jpm = {"upper_Jpm",
                   b_ok ? two_n + std::max(in.b_plus / in.s_plus, in.b_minus / in.s_minus) : 0.0,
                   b_ok && in.hyperbolic, "hyperbolicity heuristic passed; b^± < 0"};
  rep.measure_lower = {"measure_lower", has_l ? l * logd * (1.0 / in.s_plus + 1.0 / in.s_minus) : 0.0,
                       has_l && in.hyperbolic, "hyperbolicity heuristic passed; integer l"};

  // Consistency: measured slope vs bound, lhs <= rhs + tolerance.
  auto add_check = [&](const std::string& name, double lhs, double rhs, bool applicable) {
    ConsistencyCheck c;
    c.name = name;
    c.lhs = lhs;
    c.rhs = rhs;
    c.applicable = applicable && std::isfinite(lhs) && std::isfinite(rhs);
    c.pass = !c.applicable || lhs <= rhs + tolerance;
    rep.checks.push_back(c);
  };
  add_check("boxdim_Kminus_below_upper_Kminus", in.boxdim_Kminus, rep.upper_Kminus.value,
            rep.upper_Kminus.emitted);
  add_check("boxdim_K_below_upper_Kminus", in.boxdim_K, rep.upper_Kminus.value,
            rep.upper_Kminus.emitted);
  add_check("lower_J_below_boxdim_J", rep.lower_J.value, in.boxdim_J, rep.lower_J.emitted);
  add_check("lower_Jplus_below_2n", rep.lower_Jplus.value, two_n, rep.lower_Jplus.emitted);
  {
    // Strict sub-2n placement of the t=1 pressure bound (no tolerance).
    ConsistencyCheck c;
    c.name = "upper_Jpm_below_2n";
    c.lhs = rep.upper_Jpm.value;
    c.rhs = two_n;
    c.applicable = rep.upper_Jpm.emitted;
    c.pass = !c.applicable || c.lhs < c.rhs;
    rep.checks.push_back(c);
  }
  add_check("boxdim_Jplus_below_upper_Jpm", in.boxdim_Jplus, rep.upper_Jpm.value,
            rep.upper_Jpm.emitted);
  add_check("boxdim_Jminus_below_upper_Jpm", in.boxdim_Jminus, rep.upper_Jpm.value,
            rep.upper_Jpm.emitted);
  add_check("measure_lower_below_boxdim_J", rep.measure_lower.value, in.boxdim_J,
            rep.measure_lower.emitted);
  return rep;
}

}  // namespace regal
