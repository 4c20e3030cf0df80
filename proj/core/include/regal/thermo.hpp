#pragma once
// Periodic-orbit thermodynamic formalism: pressure functions over saddle
// censuses, Bowen-Ruelle roots t^u/t^s, entropy estimates, the stable-set
// dimension formula, and a (heuristic) hyperbolicity diagnostic.

#include <string>
#include <vector>

#include "regal/map.hpp"
#include "regal/orbit.hpp"
#include "regal/types.hpp"

namespace regal {

enum class Weight { Unstable, Stable };

std::string weight_name(Weight w);

// P_k(t) = (1/k) log sum over saddle fixed points x of f^k of exp(t * S_k(x)),
// S_k = -log|Lambda_u| (unstable) or +log|Lambda_s| (stable), where Lambda_u
// (resp. Lambda_s) is the product of the expanding (resp. contracting)
// multipliers of Df^k at x. Cycles are weighted by their length (fixed points
// of f^k, not deduplicated cycles); multipliers inside the unit band are
// excluded cycle-wise and reported via band_excluded. t = 0 reduces exactly
// to (1/k) log #(saddle fixed points). Throws std::domain_error when the
// census holds no usable saddle.
double pressure(const PeriodicCensus& census, double t, Weight w, long long* band_excluded = nullptr);

struct PressureCurve {
  int k = 0;
  Weight weight = Weight::Unstable;
  std::vector<std::pair<double, double>> samples;  // (t, P_k(t))
  long long orbit_count = 0;                       // saddle fixed points used
  long long band_excluded = 0;
};

PressureCurve pressure_curve(const PeriodicCensus& census, const std::vector<double>& t_grid,
                             Weight w);

struct BowenRuelleRoot {
  double t = 0.0;
  double lo = 0.0, hi = 0.0;  // final bracketing interval
  int k = 0;                  // census level of the reported root
  double residual = 0.0;      // |P_k(t)|
  std::vector<std::pair<int, double>> convergence;  // (k, t_k) across levels
};

// Bisection of P_k on [0, bracket_hi] per census (ascending levels); the
// reported root comes from the deepest level. Requires P_k(0) > 0 and
// P_k(bracket_hi) < 0, else std::domain_error("pressure has no root ...").
BowenRuelleRoot bowen_ruelle_root(const std::vector<PeriodicCensus>& censuses, Weight w,
                                  double bracket_hi = 2.0, double residual_tol = 1e-10);

struct EntropyEstimate {
  struct Row {
    int k = 0;
    long long count = 0;  // saddle fixed points of f^k
    double h = 0.0;       // log(count)/k
  };
  std::vector<Row> per_k;
  double target = 0.0;  // l log d
};

// h_k = (1/k) log #(saddle fixed points of f^k) from the supplied censuses,
// compared against l log d (target is 0 when the map has no integer l).
EntropyEstimate entropy_estimate(const MapSpec& m, const std::vector<PeriodicCensus>& censuses);

// Theorem-style formula t^u + 2n - 2 for index-one censuses; validates that
// every saddle in the census has unstable index one and that t^u is in (0, 2).
double stable_set_dimension(const MapSpec& m, const PeriodicCensus& census, double t_u);

// 2n + max(b^+/s^+, b^-/s^-) with b^± = pressure at t = 1 (must be < 0).
double upper_bound_jpm(const MapSpec& m, double b_plus, double b_minus, double s_plus,
                       double s_minus);

struct HyperbolicityOptions {
  int k = 20;             // cocycle length per orbit segment
  double min_gap = 1e3;   // required ratio between split singular values
  int workers = 1;
};

struct HyperbolicityDiagnostic {
  bool pass = false;
  int index = -1;         // consistent split position (unstable index), -1 if mixed
  double worst_gap = 0.0; // min over orbits of the dominant singular-value gap
  int orbits_checked = 0;
  int orbits_failed = 0;  // gap below threshold or inconsistent split
  int dropped = 0;        // orbit escaped mid-product
};

// Along each sample orbit, the k-step renormalized cocycle must show a
// singular-value gap >= min_gap at a consistent index. A passing verdict is
// evidence, never proof, of uniform hyperbolicity on the sampled set.
HyperbolicityDiagnostic hyperbolicity_heuristic(const MapSpec& m, const std::vector<CPoint>& samples,
                                                const HyperbolicityOptions& opts);

}  // namespace regal
