// regal: numerical laboratory for regular polynomial automorphisms of C^n.
// Every subcommand writes CSV artifacts (+ graymaps where applicable) and a
// manifest with content hashes into --out; identical config + seed produce
// byte-identical CSVs for any --workers value.

#include <CLI11.hpp>

#include <cstdio>
#include <functional>
#include <iostream>

#include "regal/config.hpp"
#include "regal/experiments.hpp"
#include "regal/version.hpp"

namespace {

struct CommonOpts {
  std::string config;
  uint64_t seed = 1;
  int workers = 1;
  std::string out = "regal-out";
};

void add_common(CLI::App* sub, CommonOpts& c, bool needs_config) {
  auto* opt = sub->add_option("--config", c.config, "map configuration JSON file");
  if (needs_config) opt->required();
  sub->add_option("--seed", c.seed, "64-bit RNG seed (default 1)");
  sub->add_option("--workers", c.workers, "worker threads (default 1)")
      ->check(CLI::PositiveNumber);
  sub->add_option("--out", c.out, "output directory (default regal-out)");
}

regal::RunContext make_ctx(const CommonOpts& c) {
  regal::RunContext ctx;
  ctx.out = c.out;
  ctx.seed = c.seed;
  ctx.workers = c.workers;
  if (!c.config.empty())
    ctx.config_hash = regal::hex64(regal::fnv1a64_file(c.config));
  return ctx;
}

regal::GridWindow parse_window(const std::vector<double>& w) {
  if (w.empty()) return {};
  return {w[0], w[1], w[2], w[3]};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"regal " + std::string(regal::kVersion) +
               " - dynamics of regular polynomial automorphisms of C^n"};
  app.require_subcommand(1);
  std::function<int()> task;

  // ---- info ----------------------------------------------------------------
  {
    auto* sub = app.add_subcommand("info", "map bookkeeping: degrees, l, det Df, I^+/I^-");
    auto common = std::make_shared<CommonOpts>();
    add_common(sub, *common, true);
    sub->callback([common, &task] {
      task = [common] {
        const regal::MapSpec m = regal::load_map_config(common->config);
        std::cout << m.describe();
        regal::run_info(m, make_ctx(*common));
        return 0;
      };
    });
  }

  // ---- filtration-verify -----------------------------------------------------
  {
    auto* sub = app.add_subcommand("filtration-verify",
                                   "Monte Carlo check of the V-/V/V+ invariances");
    auto common = std::make_shared<CommonOpts>();
    auto params = std::make_shared<regal::FiltrationRunParams>();
    add_common(sub, *common, true);
    sub->add_option("--radius", params->radius, "filtration radius R (<= 0: choose automatically)");
    sub->add_option("--samples", params->samples, "sample count (default 20000)");
    sub->add_option("--iters", params->iters, "orbit steps checked per sample (default 8)");
    sub->callback([common, params, &task] {
      task = [common, params] {
        const regal::MapSpec m = regal::load_map_config(common->config);
        regal::run_filtration_verify(m, make_ctx(*common), *params);
        return 0;
      };
    });
  }

  // ---- classify-grid / basins -------------------------------------------------
  for (const bool basins : {false, true}) {
    auto* sub = app.add_subcommand(basins ? "basins" : "classify-grid",
                                   basins ? "verdict grid with attracting-cycle labels"
                                          : "orbit-verdict grid over a real window");
    auto common = std::make_shared<CommonOpts>();
    auto params = std::make_shared<regal::GridRunParams>();
    auto window = std::make_shared<std::vector<double>>();
    add_common(sub, *common, true);
    sub->add_option("--window", *window, "x0 x1 y0 y1 (default -2 2 -2 2)")->expected(4);
    sub->add_option("--res", params->resolution, "grid resolution per axis (default 256)");
    sub->add_option("--budget", params->budget, "iteration budget per cell (default 2000)");
    sub->add_option("--radius", params->radius, "filtration radius (<= 0: automatic)");
    if (basins)
      sub->add_option("--kmax", params->cycle_kmax, "attracting-cycle search depth (default 2)");
    sub->callback([common, params, window, basins, &task] {
      task = [common, params, window, basins] {
        const regal::MapSpec m = regal::load_map_config(common->config);
        regal::GridRunParams p = *params;
        p.window = parse_window(*window);
        regal::run_classify_grid(m, make_ctx(*common), p, basins);
        return 0;
      };
    });
  }

  // ---- periodic -----------------------------------------------------------
  {
    auto* sub = app.add_subcommand("periodic", "Newton census of the fixed points of f^k");
    auto common = std::make_shared<CommonOpts>();
    auto params = std::make_shared<regal::PeriodicRunParams>();
    add_common(sub, *common, true);
    sub->add_option("--k", params->k, "census level (default 6)");
    sub->add_option("--grid", params->seeds_per_axis, "real seed grid per axis (default 200)");
    sub->add_option("--extra", params->extra_complex_seeds, "extra complex seeds (default 512)");
    sub->add_option("--radius", params->seed_radius, "seed box radius (<= 0: automatic)");
    sub->callback([common, params, &task] {
      task = [common, params] {
        const regal::MapSpec m = regal::load_map_config(common->config);
        const regal::Manifest man = regal::run_periodic(m, make_ctx(*common), *params);
        (void)man;
        return 0;
      };
    });
  }

  // ---- green ----------------------------------------------------------------
  {
    auto* sub = app.add_subcommand("green", "G^+/G^- over a real window (CSV + graymap)");
    auto common = std::make_shared<CommonOpts>();
    auto params = std::make_shared<regal::GreenRunParams>();
    auto window = std::make_shared<std::vector<double>>();
    add_common(sub, *common, true);
    sub->add_option("--window", *window, "x0 x1 y0 y1 (default -2 2 -2 2)")->expected(4);
    sub->add_option("--res", params->resolution, "grid resolution (default 256)");
    sub->add_option("--budget", params->green.budget, "iteration budget (default 200)");
    sub->add_option("--big-radius", params->green.big_radius, "escape radius (default 1e10)");
    sub->callback([common, params, window, &task] {
      task = [common, params, window] {
        const regal::MapSpec m = regal::load_map_config(common->config);
        regal::GreenRunParams p = *params;
        p.window = parse_window(*window);
        regal::run_green(m, make_ctx(*common), p);
        return 0;
      };
    });
  }

  // ---- boxdim ---------------------------------------------------------------
  {
    auto* sub = app.add_subcommand("boxdim", "box-counting dimension of a sampled set");
    auto common = std::make_shared<CommonOpts>();
    auto params = std::make_shared<regal::BoxdimRunParams>();
    auto scales = std::make_shared<std::vector<int>>();
    auto fitw = std::make_shared<std::vector<int>>();
    add_common(sub, *common, true);
    sub->add_option("--strategy", params->strategy, "saddles | boundary (default saddles)");
    sub->add_option("--kmax", params->k_max, "saddle census depth (default 8)");
    sub->add_option("--grid", params->seeds_per_axis, "seed grid per axis (default 200)");
    sub->add_option("--scales", *scales, "coarse fine dyadic levels (default 3 9)")->expected(2);
    sub->add_option("--fit-window", *fitw, "fit window indices lo hi")->expected(2);
    sub->callback([common, params, scales, fitw, &task] {
      task = [common, params, scales, fitw] {
        const regal::MapSpec m = regal::load_map_config(common->config);
        regal::BoxdimRunParams p = *params;
        if (!scales->empty()) {
          p.box.coarse_level = (*scales)[0];
          p.box.fine_level = (*scales)[1];
        }
        if (!fitw->empty()) {
          p.box.fit_lo = (*fitw)[0];
          p.box.fit_hi = (*fitw)[1];
        }
        regal::run_boxdim(m, make_ctx(*common), p);
        return 0;
      };
    });
  }

  // ---- growth ---------------------------------------------------------------
  {
    auto* sub = app.add_subcommand("growth", "growth rates s^+/s^- of max ||Df^{±k}||");
    auto common = std::make_shared<CommonOpts>();
    auto params = std::make_shared<regal::GrowthRunParams>();
    add_common(sub, *common, true);
    sub->add_option("--kmax", params->k_max, "cocycle length (default 24)");
    sub->add_option("--census-kmax", params->census_kmax, "saddle sample depth (default 6)");
    sub->add_option("--grid", params->seeds_per_axis, "seed grid per axis (default 200)");
    sub->callback([common, params, &task] {
      task = [common, params] {
        const regal::MapSpec m = regal::load_map_config(common->config);
        regal::run_growth(m, make_ctx(*common), *params);
        return 0;
      };
    });
  }

  // ---- pressure -------------------------------------------------------------
  {
    auto* sub = app.add_subcommand("pressure",
                                   "pressure curve, Bowen-Ruelle roots, entropy table");
    auto common = std::make_shared<CommonOpts>();
    auto params = std::make_shared<regal::PressureRunParams>();
    auto weight = std::make_shared<std::string>("unstable");
    auto tgrid = std::make_shared<std::vector<double>>();
    add_common(sub, *common, true);
    sub->add_option("--kmax", params->k_max, "census depth (default 6)");
    sub->add_option("--weight", *weight, "unstable | stable (default unstable)");
    sub->add_option("--t-grid", *tgrid, "explicit t values for the curve");
    sub->add_option("--bracket-hi", params->bracket_hi, "root bracket upper end (default 2)");
    sub->add_option("--grid", params->seeds_per_axis, "seed grid per axis (default 200)");
    sub->callback([common, params, weight, tgrid, &task] {
      task = [common, params, weight, tgrid] {
        const regal::MapSpec m = regal::load_map_config(common->config);
        regal::PressureRunParams p = *params;
        if (*weight == "stable")
          p.weight = regal::Weight::Stable;
        else if (*weight != "unstable")
          throw regal::ConfigError("--weight must be unstable or stable");
        p.t_grid = *tgrid;
        regal::run_pressure(m, make_ctx(*common), p);
        return 0;
      };
    });
  }

  // ---- dims -----------------------------------------------------------------
  {
    auto* sub = app.add_subcommand("dims", "full dimension report with hypothesis flags");
    auto common = std::make_shared<CommonOpts>();
    auto params = std::make_shared<regal::DimsRunParams>();
    add_common(sub, *common, true);
    sub->add_option("--census-kmax", params->census_kmax, "pressure census depth (default 6)");
    sub->add_option("--cloud-kmax", params->cloud_kmax, "saddle cloud depth (default 8)");
    sub->add_option("--growth-kmax", params->growth_kmax, "cocycle length (default 24)");
    sub->add_option("--grid", params->seeds_per_axis, "seed grid per axis (default 200)");
    sub->callback([common, params, &task] {
      task = [common, params] {
        const regal::MapSpec m = regal::load_map_config(common->config);
        regal::run_dims(m, make_ctx(*common), *params);
        return 0;
      };
    });
  }

  // ---- sweep ----------------------------------------------------------------
  {
    auto* sub = app.add_subcommand("sweep", "t^u/t^s/boxdim along a quadratic-family path");
    auto common = std::make_shared<CommonOpts>();
    auto params = std::make_shared<regal::SweepRunParams>();
    add_common(sub, *common, false);
    sub->add_option("--a", params->a, "Jacobian parameter a (default 0.1)");
    sub->add_option("--c-from", params->c_from, "path start (default -6)");
    sub->add_option("--c-to", params->c_to, "path end (default -5)");
    sub->add_option("--steps", params->steps, "path steps (default 20)");
    sub->add_option("--grid", params->seeds_per_axis, "seed grid per axis (default 120)");
    sub->add_option("--k-root", params->sweep.k_root, "root census depth (default 6)");
    sub->add_option("--k-cloud", params->sweep.k_cloud, "cloud census depth (default 8)");
    sub->callback([common, params, &task] {
      task = [common, params] {
        regal::run_sweep(make_ctx(*common), *params);
        return 0;
      };
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;  // unknown subcommand / bad usage
  }

  try {
    return task ? task() : 2;
  } catch (const regal::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
