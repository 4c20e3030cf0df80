// Microbenchmarks for the hot numerical kernels: map evaluation, jacobian
// accumulation, Green function evaluation, Newton polishing, box counting,
// and pressure sums.
#include <benchmark/benchmark.h>

#include "regal/boxcount.hpp"
#include "regal/green.hpp"
#include "regal/map.hpp"
#include "regal/orbit.hpp"
#include "regal/rng.hpp"
#include "regal/thermo.hpp"

namespace {

using namespace regal;

MapSpec horseshoe() {
  return MapSpec::build_henon_composition(
      {{Poly1::quadratic(Cplx(1.0), Cplx(0.0), Cplx(-6.0)), Cplx(1.0)}});
}

MapSpec shift3() {
  return MapSpec::build_shift_like(3, Poly1({Cplx(-0.9), Cplx(0.0), Cplx(1.0)}), Cplx(0.8));
}

std::vector<CPoint> ball_points(int n, double R, int count) {
  return random_seeds(n, R, count, 42);
}

void bm_eval_forward_henon(benchmark::State& state) {
  const MapSpec m = horseshoe();
  const auto pts = ball_points(2, 2.0, 256);
  size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(m.eval_forward(pts[i++ & 255]));
  }
}
BENCHMARK(bm_eval_forward_henon);

void bm_eval_forward_shift3(benchmark::State& state) {
  const MapSpec m = shift3();
  const auto pts = ball_points(3, 2.0, 256);
  size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(m.eval_forward(pts[i++ & 255]));
  }
}
BENCHMARK(bm_eval_forward_shift3);

void bm_jacobian_cocycle(benchmark::State& state) {
  const MapSpec m = horseshoe();
  const auto pts = ball_points(2, 1.5, 16);
  const int k = static_cast<int>(state.range(0));
  size_t i = 0;
  for (auto _ : state) {
    CPoint q = pts[i++ & 15];
    CMatrix J = CMatrix::Identity(2, 2);
    for (int step = 0; step < k && !q.escaped; ++step) {
      J = m.jacobian(q) * J;
      q = m.eval_forward(q);
    }
    benchmark::DoNotOptimize(J);
  }
}
BENCHMARK(bm_jacobian_cocycle)->Arg(4)->Arg(16);

void bm_green_plus(benchmark::State& state) {
  const MapSpec m = horseshoe();
  const auto pts = ball_points(2, 5.0, 256);
  GreenOptions go;
  size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(green_plus(m, pts[i++ & 255], go));
  }
}
BENCHMARK(bm_green_plus);

void bm_newton_polish(benchmark::State& state) {
  const MapSpec m = horseshoe();
  NewtonOptions no;
  const auto seeds = grid_seeds(4.0, 12);
  for (auto _ : state) {
    benchmark::DoNotOptimize(find_periodic_points(m, 2, seeds, no));
  }
}
BENCHMARK(bm_newton_polish);

void bm_box_count(benchmark::State& state) {
  CounterRng rng(7, 3);
  const int points = static_cast<int>(state.range(0));
  PointCloud cloud;
  cloud.dim = 2;
  cloud.coords.reserve(2 * static_cast<size_t>(points));
  for (int i = 0; i < points; ++i) {
    cloud.coords.push_back(rng.uniform(-2.0, 2.0, 2 * i));
    cloud.coords.push_back(rng.uniform(-2.0, 2.0, 2 * i + 1));
  }
  BoxCountOptions bo;
  for (auto _ : state) {
    benchmark::DoNotOptimize(box_dimension(cloud, bo, "bench"));
  }
}
BENCHMARK(bm_box_count)->Arg(1000)->Arg(10000);

void bm_pressure_sum(benchmark::State& state) {
  PeriodicCensus census;
  census.k = 6;
  const int cycles = static_cast<int>(state.range(0));
  CounterRng rng(11, 5);
  for (int i = 0; i < cycles; ++i) {
    PeriodicOrbit o;
    o.period = 1 + (i % 6);
    o.points.assign(o.period, CPoint{Cplx(0.01 * i, 0.0), Cplx(0.0, 0.0)});
    o.multipliers = {Cplx(2.0 + rng.uniform01(i), 0.0), Cplx(0.1, 0.0)};
    o.stability = Stability::Saddle;
    o.unstable_index = 1;
    census.cycles.push_back(std::move(o));
    census.fixed_point_count += census.cycles.back().period;
    census.saddle_fixed_point_count += census.cycles.back().period;
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(pressure(census, 0.75, Weight::Unstable));
  }
}
BENCHMARK(bm_pressure_sum)->Arg(64)->Arg(1024);

}  // namespace

BENCHMARK_MAIN();
