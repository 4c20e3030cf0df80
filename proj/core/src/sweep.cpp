#include "regal/sweep.hpp"

#include <algorithm>
#include <cmath>

#include "regal/samplers.hpp"

namespace regal {

SweepResult dimension_sweep(const std::function<MapSpec(double)>& family,
                            const std::vector<double>& params,
                            const std::vector<CPoint>& seeds, const SweepOptions& opts) {
  if (params.empty()) throw std::invalid_argument("dimension_sweep: empty parameter path");
  SweepResult result;
  result.steps.reserve(params.size());

  for (double param : params) {
    SweepStep step;
    step.param = param;
    try {
      const MapSpec m = family(param);
      std::vector<PeriodicCensus> censuses;
      for (int k = 2; k <= opts.k_root; ++k)
        censuses.push_back(find_periodic_points(m, k, seeds, opts.newton));

      std::vector<CPoint> saddles;
      for (const PeriodicCensus& c : censuses)
        for (const PeriodicOrbit& cyc : c.cycles)
          if (cyc.stability == Stability::Saddle)
            saddles.insert(saddles.end(), cyc.points.begin(), cyc.points.end());
      saddles = dedupe_cloud(std::move(saddles), opts.newton.dedupe_radius);
      if (saddles.empty()) throw std::runtime_error("no saddles at this parameter");

      const HyperbolicityDiagnostic diag = hyperbolicity_heuristic(m, saddles, opts.hyper);
      step.hyperbolic = diag.pass;
      if (!diag.pass) {
        step.flagged = true;
        step.note = "hyperbolicity heuristic failed";
      }

      step.t_u = bowen_ruelle_root(censuses, Weight::Unstable, opts.bracket_hi).t;
      step.t_s = bowen_ruelle_root(censuses, Weight::Stable, opts.bracket_hi).t;

      // Deeper saddle cloud for the box count.
      std::vector<CPoint> cloud =
          sample_saddles(m, opts.k_cloud, seeds, opts.newton);
      step.boxdim_J = box_dimension(cloud_from_cpoints(cloud), opts.box, "J").slope;
    } catch (const std::exception& e) {
      step.flagged = true;
      step.note = step.note.empty() ? e.what() : step.note + "; " + e.what();
    }
    result.steps.push_back(std::move(step));
  }

  // Smoothness diagnostics on the t^u sequence.
  const auto& st = result.steps;
  for (size_t i = 1; i < st.size(); ++i) {
    if (std::isnan(st[i - 1].t_u) || std::isnan(st[i].t_u)) continue;
    const double jump = std::abs(st[i].t_u - st[i - 1].t_u);
    result.max_jump = std::max(result.max_jump, jump);
    if (jump > opts.jump_tol) {
      result.smooth = false;
      result.steps[i].flagged = true;
      if (!result.steps[i].note.empty()) result.steps[i].note += "; ";
      result.steps[i].note += "t^u jump above tolerance";
    }
  }
  for (size_t i = 2; i < st.size(); ++i) {
    if (std::isnan(st[i - 2].t_u) || std::isnan(st[i - 1].t_u) || std::isnan(st[i].t_u)) continue;
    result.max_second_diff = std::max(
        result.max_second_diff, std::abs(st[i].t_u - 2.0 * st[i - 1].t_u + st[i - 2].t_u));
  }
  return result;
}

}  // namespace regal
