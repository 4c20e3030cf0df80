#pragma once
// Named experiment runners shared by the CLI and the acceptance tests: each
// writes CSV artifacts (plus graymaps where applicable) and a manifest into
// an output directory. Identical inputs produce byte-identical artifacts
// regardless of the worker count.

#include <filesystem>
#include <string>
#include <vector>

#include "regal/boxcount.hpp"
#include "regal/filtration.hpp"
#include "regal/green.hpp"
#include "regal/growth.hpp"
#include "regal/io.hpp"
#include "regal/map.hpp"
#include "regal/orbit.hpp"
#include "regal/report.hpp"
#include "regal/samplers.hpp"
#include "regal/sweep.hpp"
#include "regal/thermo.hpp"

namespace regal {

struct RunContext {
  std::filesystem::path out = ".";
  uint64_t seed = 1;
  int workers = 1;
  std::string config_hash = "-";

  Manifest start(const std::string& subcommand) const;
};

// Writes manifest.json for the artifacts recorded so far.
void finish(Manifest& man, const RunContext& ctx);

// info.csv: key/value summary of the map bookkeeping.
Manifest run_info(const MapSpec& m, const RunContext& ctx);

struct FiltrationRunParams {
  double radius = 0.0;  // <= 0: choose automatically
  long long samples = 20000;
  int iters = 8;
};
// filtration_summary.csv + filtration_properties.csv.
Manifest run_filtration_verify(const MapSpec& m, const RunContext& ctx,
                               const FiltrationRunParams& params);

struct GridRunParams {
  GridWindow window;
  int resolution = 256;
  int budget = 2000;
  int cycle_kmax = 2;     // attracting-cycle search depth (basins only)
  double radius = 0.0;    // <= 0: choose automatically
  int seeds_per_axis = 64;
};
// classify.csv + classify.pgm (+ cycles.csv when discover_cycles).
Manifest run_classify_grid(const MapSpec& m, const RunContext& ctx, const GridRunParams& params,
                           bool discover_cycles);

struct PeriodicRunParams {
  int k = 6;
  int seeds_per_axis = 200;
  int extra_complex_seeds = 512;
  double seed_radius = 0.0;  // <= 0: use the chosen filtration radius
  NewtonOptions newton;
};
// periodic.csv (one row per cycle) + periodic_summary.csv.
Manifest run_periodic(const MapSpec& m, const RunContext& ctx, const PeriodicRunParams& params);

struct GreenRunParams {
  GridWindow window;
  int resolution = 256;
  GreenOptions green;
};
// green.csv + green_plus.pgm.
Manifest run_green(const MapSpec& m, const RunContext& ctx, const GreenRunParams& params);

struct BoxdimRunParams {
  std::string strategy = "saddles";  // or "boundary"
  int k_max = 8;
  int seeds_per_axis = 200;
  BoxCountOptions box;
  BoundaryOptions boundary;
  NewtonOptions newton;
};
// boxdim.csv (scale/count ladder) + boxdim_summary.csv.
Manifest run_boxdim(const MapSpec& m, const RunContext& ctx, const BoxdimRunParams& params);

struct GrowthRunParams {
  int k_max = 24;
  int census_kmax = 6;
  int seeds_per_axis = 200;
  NewtonOptions newton;
};
// growth.csv ((k, s_k) both directions) + growth_summary.csv.
Manifest run_growth(const MapSpec& m, const RunContext& ctx, const GrowthRunParams& params);

struct PressureRunParams {
  int k_max = 6;
  Weight weight = Weight::Unstable;
  std::vector<double> t_grid;  // empty: 0..2 in 50 steps
  int seeds_per_axis = 200;
  double bracket_hi = 2.0;
  NewtonOptions newton;
};
// pressure.csv + roots.csv + entropy.csv.
Manifest run_pressure(const MapSpec& m, const RunContext& ctx, const PressureRunParams& params);

struct DimsRunParams {
  int census_kmax = 6;
  int cloud_kmax = 8;
  int growth_kmax = 24;
  int seeds_per_axis = 200;
  NewtonOptions newton;
  HyperbolicityOptions hyper;
  BoxCountOptions box;
  BoundaryOptions boundary;
  SprayOptions spray;
};
// dims_measured.csv + dims_bounds.csv + dims_checks.csv.
Manifest run_dims(const MapSpec& m, const RunContext& ctx, const DimsRunParams& params);

struct SweepRunParams {
  // Hénon single-stage family p(y) = y^2 + c with fixed a; c along the path.
  double a = 0.1;
  double c_from = -6.0, c_to = -5.0;
  int steps = 20;
  int seeds_per_axis = 120;
  SweepOptions sweep;
};
// sweep.csv.
Manifest run_sweep(const RunContext& ctx, const SweepRunParams& params);

// Shared seed builder: real grid (n = 2) plus counter-seeded complex seeds.
std::vector<CPoint> census_seeds(const MapSpec& m, double R, int per_axis, int extra_complex,
                                 uint64_t seed);

}  // namespace regal
