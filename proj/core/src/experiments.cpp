#include "regal/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "regal/parallel.hpp"
#include "regal/version.hpp"

namespace regal {

namespace {

using Row = std::vector<std::string>;
using Rows = std::vector<Row>;

std::string b2s(bool b) { return b ? "1" : "0"; }

std::string join_warnings(const std::vector<std::string>& w) {
  std::string out;
  for (size_t i = 0; i < w.size(); ++i) out += (i ? "; " : "") + w[i];
  return out;
}

// Point coordinate columns z0_re, z0_im, ..., appended to a header or row.
void point_header(int n, Row& header, const std::string& prefix) {
  for (int c = 0; c < n; ++c) {
    header.push_back(prefix + std::to_string(c) + "_re");
    header.push_back(prefix + std::to_string(c) + "_im");
  }
}

void point_row(const CPoint& p, Row& row) {
  for (const Cplx& z : p.z) {
    row.push_back(fmt_double(z.real()));
    row.push_back(fmt_double(z.imag()));
  }
}

void blank_point_row(int n, Row& row) {
  for (int c = 0; c < 2 * n; ++c) row.emplace_back();
}

FiltrationSpec auto_filtration(const MapSpec& m, double radius, uint64_t seed, int workers) {
  if (radius > 0.0) return default_regions(m, radius);
  RadiusSearchOptions rs;
  rs.trial.samples = 4000;
  rs.trial.iters = 6;
  rs.trial.seed = seed;
  rs.trial.workers = workers;
  return choose_filtration(m, rs);
}

uint8_t verdict_gray(const OrbitClass& oc) {
  switch (oc.verdict) {
    case Verdict::EscapesForward: return 255;
    case Verdict::EscapesBackward: return 190;
    case Verdict::ConvergesToCycle: {
      const int g = 120 - 20 * oc.cycle_id;
      return static_cast<uint8_t>(std::max(60, g));
    }
    case Verdict::BoundedNonAttracted: return 30;
    case Verdict::Undecided: return 0;
  }
  return 0;
}

}  // namespace

Manifest RunContext::start(const std::string& subcommand) const {
  Manifest man;
  man.tool = "regal";
  man.version = kVersion;
  man.subcommand = subcommand;
  man.config_hash = config_hash;
  man.seed = seed;
  man.workers = workers;
  return man;
}

void finish(Manifest& man, const RunContext& ctx) { man.write(ctx.out / "manifest.json"); }

std::vector<CPoint> census_seeds(const MapSpec& m, double R, int per_axis, int extra_complex,
                                 uint64_t seed) {
  std::vector<CPoint> seeds;
  if (m.n() == 2) {
    seeds = grid_seeds(R, per_axis);
  } else {
    seeds = random_seeds(m.n(), R, per_axis * per_axis, seed, 101);
  }
  if (extra_complex > 0) {
    std::vector<CPoint> extra = random_seeds(m.n(), R, extra_complex, seed, 102);
    seeds.insert(seeds.end(), extra.begin(), extra.end());
  }
  return seeds;
}

Manifest run_info(const MapSpec& m, const RunContext& ctx) {
  std::filesystem::create_directories(ctx.out);
  Manifest man = ctx.start("info");
  Rows rows;
  rows.push_back({"family", family_name(m.family())});
  rows.push_back({"n", std::to_string(m.n())});
  rows.push_back({"degree", std::to_string(m.degree())});
  rows.push_back({"inverse_degree", std::to_string(m.inverse_degree())});
  rows.push_back({"regularity_index",
                  m.regularity_index() ? std::to_string(*m.regularity_index()) : "none"});
  rows.push_back({"det_df_re", fmt_double(m.det_df().real())});
  rows.push_back({"det_df_im", fmt_double(m.det_df().imag())});
  rows.push_back({"abs_det_df", fmt_double(std::abs(m.det_df()))});
  rows.push_back({"indeterminacy_plus", m.indeterminacy_plus().to_string(m.n())});
  rows.push_back({"indeterminacy_minus", m.indeterminacy_minus().to_string(m.n())});
  rows.push_back({"dim_indeterminacy_plus", std::to_string(m.indeterminacy_plus().dim)});
  rows.push_back({"dim_indeterminacy_minus", std::to_string(m.indeterminacy_minus().dim)});
  rows.push_back({"regular", b2s(m.regular())});
  rows.push_back({"warnings", join_warnings(m.warnings())});
  write_csv(ctx.out / "info.csv", {"key", "value"}, rows);
  man.add_artifact(ctx.out, "info.csv");
  finish(man, ctx);
  return man;
}

Manifest run_filtration_verify(const MapSpec& m, const RunContext& ctx,
                               const FiltrationRunParams& params) {
  std::filesystem::create_directories(ctx.out);
  Manifest man = ctx.start("filtration-verify");
  const FiltrationSpec fs = auto_filtration(m, params.radius, ctx.seed, ctx.workers);
  VerifyOptions vo;
  vo.samples = params.samples;
  vo.iters = params.iters;
  vo.seed = ctx.seed;
  vo.workers = ctx.workers;
  const ViolationReport rep = verify_filtration(m, fs, vo);

  Rows summary;
  summary.push_back({"radius", fmt_double(fs.R)});
  summary.push_back({"margin", fmt_double(fs.margin)});
  summary.push_back({"samples", std::to_string(rep.samples)});
  summary.push_back({"iters", std::to_string(rep.iters)});
  summary.push_back({"seed", std::to_string(rep.seed)});
  summary.push_back({"total_violations", std::to_string(rep.total_violations())});
  write_csv(ctx.out / "filtration_summary.csv", {"key", "value"}, summary);

  Row header{"property", "checked", "violations", "has_witness", "witness_index"};
  point_header(m.n(), header, "witness_z");
  Rows rows;
  for (const PropertyCheck& p : rep.properties) {
    Row row{p.name, std::to_string(p.checked), std::to_string(p.violations), b2s(p.has_witness),
            std::to_string(p.witness_index)};
    if (p.has_witness)
      point_row(p.witness, row);
    else
      blank_point_row(m.n(), row);
    rows.push_back(std::move(row));
  }
  write_csv(ctx.out / "filtration_properties.csv", header, rows);
  man.add_artifact(ctx.out, "filtration_summary.csv");
  man.add_artifact(ctx.out, "filtration_properties.csv");
  finish(man, ctx);
  return man;
}

namespace {

Rows cycle_rows(const std::vector<PeriodicOrbit>& cycles, int n, int census_k) {
  Rows rows;
  int id = 0;
  for (const PeriodicOrbit& c : cycles) {
    Row row{std::to_string(census_k), std::to_string(id++), std::to_string(c.period),
            stability_name(c.stability), std::to_string(c.unstable_index), fmt_double(c.residual)};
    point_row(c.representative(), row);
    for (int i = 0; i < n; ++i) {
      row.push_back(fmt_double(c.multipliers[static_cast<size_t>(i)].real()));
      row.push_back(fmt_double(c.multipliers[static_cast<size_t>(i)].imag()));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

Row cycle_header(int n) {
  Row header{"census_k", "cycle_id", "period", "stability", "unstable_index", "residual"};
  point_header(n, header, "rep_z");
  for (int i = 0; i < n; ++i) {
    header.push_back("mult" + std::to_string(i) + "_re");
    header.push_back("mult" + std::to_string(i) + "_im");
  }
  return header;
}

}  // namespace

Manifest run_classify_grid(const MapSpec& m, const RunContext& ctx, const GridRunParams& params,
                           bool discover_cycles) {
  std::filesystem::create_directories(ctx.out);
  Manifest man = ctx.start(discover_cycles ? "basins" : "classify-grid");
  const FiltrationSpec fs = auto_filtration(m, params.radius, ctx.seed, ctx.workers);

  std::vector<PeriodicOrbit> cycles;
  if (discover_cycles) {
    NewtonOptions no;
    no.workers = ctx.workers;
    cycles = find_attracting_cycles(
        m, params.cycle_kmax, census_seeds(m, fs.R, params.seeds_per_axis, 256, ctx.seed), no);
  }

  ClassifyOptions co;
  co.budget = params.budget;
  const BasinGrid grid = basin_map(m, fs, cycles, params.window, params.resolution,
                                   params.resolution, co, ctx.workers,
                                   std::vector<Cplx>(static_cast<size_t>(m.n() - 2), Cplx(0, 0)));

  Rows rows;
  std::vector<uint8_t> pixels(grid.cells.size());
  const double dx = (params.window.x1 - params.window.x0) / grid.nx;
  const double dy = (params.window.y1 - params.window.y0) / grid.ny;
  for (int row = 0; row < grid.ny; ++row)
    for (int col = 0; col < grid.nx; ++col) {
      const OrbitClass& oc = grid.at(row, col);
      const double x = params.window.x0 + (col + 0.5) * dx;
      const double y = params.window.y1 - (row + 0.5) * dy;
      rows.push_back({std::to_string(row), std::to_string(col), fmt_double(x), fmt_double(y),
                      verdict_name(oc.verdict), std::to_string(oc.steps),
                      std::to_string(oc.cycle_id)});
      pixels[static_cast<size_t>(row) * grid.nx + col] = verdict_gray(oc);
    }
  write_csv(ctx.out / "classify.csv", {"row", "col", "x", "y", "verdict", "steps", "cycle"}, rows);
  write_pgm(ctx.out / "classify.pgm", grid.nx, grid.ny, pixels);
  man.add_artifact(ctx.out, "classify.csv");
  man.add_artifact(ctx.out, "classify.pgm");

  if (discover_cycles) {
    write_csv(ctx.out / "cycles.csv", cycle_header(m.n()), cycle_rows(cycles, m.n(), 0));
    man.add_artifact(ctx.out, "cycles.csv");
  }
  finish(man, ctx);
  return man;
}

Manifest run_periodic(const MapSpec& m, const RunContext& ctx, const PeriodicRunParams& params) {
  std::filesystem::create_directories(ctx.out);
  Manifest man = ctx.start("periodic");
  double R = params.seed_radius;
  if (R <= 0.0) R = auto_filtration(m, 0.0, ctx.seed, ctx.workers).R;
  NewtonOptions no = params.newton;
  no.workers = ctx.workers;
  const std::vector<CPoint> seeds =
      census_seeds(m, R, params.seeds_per_axis, params.extra_complex_seeds, ctx.seed);
  const PeriodicCensus census = find_periodic_points(m, params.k, seeds, no);

  write_csv(ctx.out / "periodic.csv", cycle_header(m.n()),
            cycle_rows(census.cycles, m.n(), census.k));
  Rows summary;
  summary.push_back({"k", std::to_string(census.k)});
  summary.push_back({"fixed_point_count", std::to_string(census.fixed_point_count)});
  summary.push_back({"saddle_fixed_point_count", std::to_string(census.saddle_fixed_point_count)});
  summary.push_back({"cycles", std::to_string(census.cycles.size())});
  summary.push_back({"seeds", std::to_string(census.seeds)});
  summary.push_back({"converged_seeds", std::to_string(census.converged_seeds)});
  summary.push_back({"seed_radius", fmt_double(R)});
  write_csv(ctx.out / "periodic_summary.csv", {"key", "value"}, summary);
  man.add_artifact(ctx.out, "periodic.csv");
  man.add_artifact(ctx.out, "periodic_summary.csv");
  finish(man, ctx);
  return man;
}

Manifest run_green(const MapSpec& m, const RunContext& ctx, const GreenRunParams& params) {
  std::filesystem::create_directories(ctx.out);
  Manifest man = ctx.start("green");
  const int res = params.resolution;
  if (res < 1) throw std::invalid_argument("run_green: resolution must be positive");
  const double dx = (params.window.x1 - params.window.x0) / res;
  const double dy = (params.window.y1 - params.window.y0) / res;

  struct Cell {
    GreenEval plus, minus;
  };
  std::vector<Cell> cells(static_cast<size_t>(res) * static_cast<size_t>(res));
  parallel_for(cells.size(), ctx.workers, [&](size_t idx) {
    const int row = static_cast<int>(idx) / res;
    const int col = static_cast<int>(idx) % res;
    CPoint p;
    p.z.assign(static_cast<size_t>(m.n()), Cplx(0.0, 0.0));
    p.z[0] = Cplx(params.window.x0 + (col + 0.5) * dx, 0.0);
    p.z[1] = Cplx(params.window.y1 - (row + 0.5) * dy, 0.0);
    cells[idx].plus = green_plus(m, p, params.green);
    cells[idx].minus = green_minus(m, p, params.green);
  });

  Rows rows;
  double gmax = 0.0;
  for (const Cell& c : cells) gmax = std::max(gmax, c.plus.value);
  std::vector<uint8_t> pixels(cells.size(), 0);
  for (size_t idx = 0; idx < cells.size(); ++idx) {
    const int row = static_cast<int>(idx) / res;
    const int col = static_cast<int>(idx) % res;
    const Cell& c = cells[idx];
    rows.push_back({fmt_double(params.window.x0 + (col + 0.5) * dx),
                    fmt_double(params.window.y1 - (row + 0.5) * dy), fmt_double(c.plus.value),
                    std::to_string(c.plus.k), b2s(c.plus.escaped), b2s(c.plus.budget_limited),
                    fmt_double(c.plus.trunc_error), fmt_double(c.minus.value),
                    std::to_string(c.minus.k), b2s(c.minus.escaped), b2s(c.minus.budget_limited),
                    fmt_double(c.minus.trunc_error)});
    if (c.plus.value > 0.0 && gmax > 0.0)
      pixels[idx] = static_cast<uint8_t>(55.0 + 200.0 * c.plus.value / gmax);
  }
  write_csv(ctx.out / "green.csv",
            {"x", "y", "gplus", "gplus_k", "gplus_escaped", "gplus_budget_limited", "gplus_trunc",
             "gminus", "gminus_k", "gminus_escaped", "gminus_budget_limited", "gminus_trunc"},
            rows);
  write_pgm(ctx.out / "green_plus.pgm", res, res, pixels);
  man.add_artifact(ctx.out, "green.csv");
  man.add_artifact(ctx.out, "green_plus.pgm");
  finish(man, ctx);
  return man;
}

Manifest run_boxdim(const MapSpec& m, const RunContext& ctx, const BoxdimRunParams& params) {
  std::filesystem::create_directories(ctx.out);
  Manifest man = ctx.start("boxdim");
  const FiltrationSpec fs = auto_filtration(m, 0.0, ctx.seed, ctx.workers);

  std::vector<CPoint> cloud;
  if (params.strategy == "saddles") {
    NewtonOptions no = params.newton;
    no.workers = ctx.workers;
    cloud = sample_saddles(m, params.k_max, census_seeds(m, fs.R, params.seeds_per_axis, 256, ctx.seed),
                           no);
  } else if (params.strategy == "boundary") {
    BoundaryOptions bo = params.boundary;
    bo.workers = ctx.workers;
    if (bo.window.x0 == bo.window.x1) bo.window = {-fs.R, fs.R, -fs.R, fs.R};
    cloud = sample_boundary(m, bo);
  } else {
    throw std::invalid_argument("run_boxdim: unknown strategy \"" + params.strategy + "\"");
  }

  const BoxCountResult r = box_dimension(cloud_from_cpoints(cloud), params.box, params.strategy);
  Rows rows;
  for (size_t i = 0; i < r.scales.size(); ++i)
    rows.push_back({fmt_double(r.scales[i]), std::to_string(r.counts[i])});
  write_csv(ctx.out / "boxdim.csv", {"scale", "count"}, rows);
  Rows summary;
  summary.push_back({"strategy", params.strategy});
  summary.push_back({"points", std::to_string(cloud.size())});
  summary.push_back({"ambient_dim", std::to_string(r.ambient_dim)});
  summary.push_back({"slope", fmt_double(r.slope)});
  summary.push_back({"residual", fmt_double(r.residual)});
  summary.push_back({"fit_lo", std::to_string(r.fit_lo)});
  summary.push_back({"fit_hi", std::to_string(r.fit_hi)});
  write_csv(ctx.out / "boxdim_summary.csv", {"key", "value"}, summary);
  man.add_artifact(ctx.out, "boxdim.csv");
  man.add_artifact(ctx.out, "boxdim_summary.csv");
  finish(man, ctx);
  return man;
}

Manifest run_growth(const MapSpec& m, const RunContext& ctx, const GrowthRunParams& params) {
  std::filesystem::create_directories(ctx.out);
  Manifest man = ctx.start("growth");
  const FiltrationSpec fs = auto_filtration(m, 0.0, ctx.seed, ctx.workers);
  NewtonOptions no = params.newton;
  no.workers = ctx.workers;
  const std::vector<CPoint> saddles = sample_saddles(
      m, params.census_kmax, census_seeds(m, fs.R, params.seeds_per_axis, 256, ctx.seed), no);
  const GrowthRate plus =
      growth_rate(m, fs, saddles, params.k_max, +1, ctx.workers, "saddles");
  const GrowthRate minus =
      growth_rate(m, fs, saddles, params.k_max, -1, ctx.workers, "saddles");

  Rows rows;
  const size_t k_both = std::min(plus.per_k.size(), minus.per_k.size());
  for (size_t i = 0; i < k_both; ++i)
    rows.push_back({std::to_string(plus.per_k[i].first), fmt_double(plus.per_k[i].second),
                    fmt_double(minus.per_k[i].second)});
  write_csv(ctx.out / "growth.csv", {"k", "s_plus_k", "s_minus_k"}, rows);
  Rows summary;
  summary.push_back({"s_plus", fmt_double(plus.s)});
  summary.push_back({"s_minus", fmt_double(minus.s)});
  summary.push_back({"samples", std::to_string(saddles.size())});
  summary.push_back({"dropped_plus", std::to_string(plus.dropped)});
  summary.push_back({"dropped_minus", std::to_string(minus.dropped)});
  write_csv(ctx.out / "growth_summary.csv", {"key", "value"}, summary);
  man.add_artifact(ctx.out, "growth.csv");
  man.add_artifact(ctx.out, "growth_summary.csv");
  finish(man, ctx);
  return man;
}

Manifest run_pressure(const MapSpec& m, const RunContext& ctx, const PressureRunParams& params) {
  std::filesystem::create_directories(ctx.out);
  Manifest man = ctx.start("pressure");
  if (params.k_max < 2) throw std::invalid_argument("run_pressure: k_max must be >= 2");
  const FiltrationSpec fs = auto_filtration(m, 0.0, ctx.seed, ctx.workers);
  NewtonOptions no = params.newton;
  no.workers = ctx.workers;
  const std::vector<CPoint> seeds = census_seeds(m, fs.R, params.seeds_per_axis, 512, ctx.seed);

  std::vector<PeriodicCensus> censuses;
  for (int k = 1; k <= params.k_max; ++k)
    censuses.push_back(find_periodic_points(m, k, seeds, no));

  std::vector<double> t_grid = params.t_grid;
  if (t_grid.empty())
    for (int i = 0; i <= 50; ++i) t_grid.push_back(2.0 * i / 50.0);
  const PressureCurve curve = pressure_curve(censuses.back(), t_grid, params.weight);
  Rows rows;
  for (const auto& [t, p] : curve.samples) rows.push_back({fmt_double(t), fmt_double(p)});
  write_csv(ctx.out / "pressure.csv", {"t", "P"}, rows);
  man.add_artifact(ctx.out, "pressure.csv");

  const std::vector<PeriodicCensus> deep(censuses.begin() + 1, censuses.end());
  const BowenRuelleRoot root = bowen_ruelle_root(deep, params.weight, params.bracket_hi);
  Rows conv;
  for (const auto& [k, t] : root.convergence) conv.push_back({std::to_string(k), fmt_double(t)});
  write_csv(ctx.out / "roots.csv", {"k", "t"}, conv);
  man.add_artifact(ctx.out, "roots.csv");

  const EntropyEstimate ent = entropy_estimate(m, censuses);
  Rows erows;
  for (const auto& r : ent.per_k)
    erows.push_back({std::to_string(r.k), std::to_string(r.count), fmt_double(r.h),
                     fmt_double(ent.target)});
  write_csv(ctx.out / "entropy.csv", {"k", "saddle_fixed_points", "h_k", "target"}, erows);
  man.add_artifact(ctx.out, "entropy.csv");
  finish(man, ctx);
  return man;
}

Manifest run_dims(const MapSpec& m, const RunContext& ctx, const DimsRunParams& params) {
  std::filesystem::create_directories(ctx.out);
  Manifest man = ctx.start("dims");
  const FiltrationSpec fs = auto_filtration(m, 0.0, ctx.seed, ctx.workers);
  NewtonOptions no = params.newton;
  no.workers = ctx.workers;
  const std::vector<CPoint> seeds = census_seeds(m, fs.R, params.seeds_per_axis, 512, ctx.seed);

  const int kmax = std::max(params.census_kmax, params.cloud_kmax);
  std::vector<PeriodicCensus> censuses;
  for (int k = 1; k <= kmax; ++k) censuses.push_back(find_periodic_points(m, k, seeds, no));

  std::vector<CPoint> saddles;
  for (int k = 0; k < params.cloud_kmax; ++k)
    for (const PeriodicOrbit& c : censuses[static_cast<size_t>(k)].cycles)
      if (c.stability == Stability::Saddle)
        saddles.insert(saddles.end(), c.points.begin(), c.points.end());
  saddles = dedupe_cloud(std::move(saddles), no.dedupe_radius);
  if (saddles.empty()) throw std::runtime_error("run_dims: no saddle periodic points found");

  DimensionInputs in;
  const GrowthRate gp = growth_rate(m, fs, saddles, params.growth_kmax, +1, ctx.workers, "saddles");
  const GrowthRate gm = growth_rate(m, fs, saddles, params.growth_kmax, -1, ctx.workers, "saddles");
  in.s_plus = gp.s;
  in.s_minus = gm.s;

  const PeriodicCensus& top = censuses[static_cast<size_t>(params.census_kmax - 1)];
  try {
    in.b_plus = pressure(top, 1.0, Weight::Unstable);
    in.b_minus = pressure(top, 1.0, Weight::Stable);
  } catch (const std::exception&) {
    // leave NaN: bounds needing b^± stay unemitted
  }

  HyperbolicityOptions ho = params.hyper;
  ho.workers = ctx.workers;
  const HyperbolicityDiagnostic diag = hyperbolicity_heuristic(m, saddles, ho);
  in.hyperbolic = diag.pass;

  in.boxdim_J = box_dimension(cloud_from_cpoints(saddles), params.box, "J").slope;

  // K^- cap V proxy: unstable spray from the first saddle cycle found.
  const PeriodicOrbit* spray_saddle = nullptr;
  for (const PeriodicCensus& c : censuses) {
    for (const PeriodicOrbit& cyc : c.cycles)
      if (cyc.stability == Stability::Saddle && cyc.unstable_index >= 1) {
        spray_saddle = &cyc;
        break;
      }
    if (spray_saddle) break;
  }
  if (spray_saddle) {
    SprayOptions so = params.spray;
    so.workers = ctx.workers;
    try {
      const std::vector<CPoint> kminus = sample_unstable_spray(m, fs, *spray_saddle, so);
      in.boxdim_Kminus = box_dimension(cloud_from_cpoints(kminus), params.box, "Kminus").slope;
    } catch (const std::exception&) {
      // spray failed: leave NaN
    }
  }

  if (m.n() == 2) {
    BoundaryOptions bo = params.boundary;
    bo.workers = ctx.workers;
    if (bo.window.x0 == bo.window.x1) bo.window = {-fs.R, fs.R, -fs.R, fs.R};
    try {
      const std::vector<CPoint> jplus = sample_boundary(m, bo);
      in.boxdim_Jplus = box_dimension(cloud_from_cpoints(jplus), params.box, "Jplus").slope;
    } catch (const std::exception&) {
      // no crossings: leave NaN
    }
  }

  const DimensionReport rep = bound_report(m, in);

  Rows measured;
  measured.push_back({"boxdim_J", fmt_double(in.boxdim_J)});
  measured.push_back({"boxdim_Kminus", fmt_double(in.boxdim_Kminus)});
  measured.push_back({"boxdim_Jplus", fmt_double(in.boxdim_Jplus)});
  measured.push_back({"s_plus", fmt_double(in.s_plus)});
  measured.push_back({"s_minus", fmt_double(in.s_minus)});
  measured.push_back({"b_plus", fmt_double(in.b_plus)});
  measured.push_back({"b_minus", fmt_double(in.b_minus)});
  measured.push_back({"hyperbolic", b2s(in.hyperbolic)});
  measured.push_back({"hyperbolic_worst_gap", fmt_double(diag.worst_gap)});
  measured.push_back({"hyperbolic_index", std::to_string(diag.index)});
  measured.push_back({"saddle_cloud_points", std::to_string(saddles.size())});
  write_csv(ctx.out / "dims_measured.csv", {"key", "value"}, measured);

  Rows bounds;
  for (const Bound* b :
       {&rep.upper_Kminus, &rep.lower_J, &rep.lower_Jplus, &rep.upper_Jpm, &rep.measure_lower})
    bounds.push_back({b->name, fmt_double(b->value), b2s(b->emitted), b->hypothesis});
  write_csv(ctx.out / "dims_bounds.csv", {"name", "value", "emitted", "hypothesis"}, bounds);

  Rows checks;
  for (const ConsistencyCheck& c : rep.checks)
    checks.push_back({c.name, b2s(c.applicable), b2s(c.pass), fmt_double(c.lhs),
                      fmt_double(c.rhs)});
  write_csv(ctx.out / "dims_checks.csv", {"name", "applicable", "pass", "lhs", "rhs"}, checks);

  man.add_artifact(ctx.out, "dims_measured.csv");
  man.add_artifact(ctx.out, "dims_bounds.csv");
  man.add_artifact(ctx.out, "dims_checks.csv");
  finish(man, ctx);
  return man;
}

Manifest run_sweep(const RunContext& ctx, const SweepRunParams& params) {
  std::filesystem::create_directories(ctx.out);
  Manifest man = ctx.start("sweep");
  if (params.steps < 1) throw std::invalid_argument("run_sweep: steps must be >= 1");

  const auto family = [&](double c) {
    return MapSpec::build_henon_composition(
        {HenonStage{Poly1::quadratic(1.0, 0.0, c), Cplx(params.a, 0.0)}});
  };
  std::vector<double> path;
  for (int i = 0; i < params.steps; ++i)
    path.push_back(params.steps == 1
                       ? params.c_from
                       : params.c_from + (params.c_to - params.c_from) * i / (params.steps - 1));

  SweepOptions so = params.sweep;
  so.newton.workers = ctx.workers;
  so.hyper.workers = ctx.workers;
  const std::vector<CPoint> seeds = grid_seeds(4.0, params.seeds_per_axis);
  const SweepResult result = dimension_sweep(family, path, seeds, so);

  Rows rows;
  for (const SweepStep& s : result.steps)
    rows.push_back({fmt_double(s.param), fmt_double(s.t_u), fmt_double(s.t_s),
                    fmt_double(s.boxdim_J), b2s(s.hyperbolic), b2s(s.flagged), s.note});
  write_csv(ctx.out / "sweep.csv",
            {"c", "t_u", "t_s", "boxdim_J", "hyperbolic", "flagged", "note"}, rows);
  Rows summary;
  summary.push_back({"max_jump", fmt_double(result.max_jump)});
  summary.push_back({"max_second_diff", fmt_double(result.max_second_diff)});
  summary.push_back({"smooth", b2s(result.smooth)});
  write_csv(ctx.out / "sweep_summary.csv", {"key", "value"}, summary);
  man.add_artifact(ctx.out, "sweep.csv");
  man.add_artifact(ctx.out, "sweep_summary.csv");
  finish(man, ctx);
  return man;
}

}  // namespace regal
