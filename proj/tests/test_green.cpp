#include <doctest.h>

#include <cmath>
#include <vector>

#include "fixtures.hpp"
#include "regal/green.hpp"
#include "regal/orbit.hpp"

using regal::CPoint;
using regal::Cplx;
using regal::GreenEval;
using regal::GreenOptions;
using regal::MapSpec;

namespace {

// Deep-iteration oracle: follow the orbit 10 steps past the escape index and
// rescale by d^{-k} there; the defining limit has geometric tail, so this is
// accurate to ~d^{-k_escape}.
double green_oracle(const MapSpec& m, const CPoint& p, double big_radius = 1e10) {
  CPoint q = p;
  int k = 0;
  while (!q.escaped && regal::norm_inf(q) <= big_radius && k < 200) {
    q = m.eval_forward(q);
    ++k;
  }
  double extra = 0;
  while (extra < 10 && !q.escaped && regal::all_finite(q)) {
    const CPoint next = m.eval_forward(q);
    if (next.escaped || !regal::all_finite(next)) break;
    q = next;
    ++k;
    ++extra;
  }
  return std::log(regal::norm_inf(q)) / std::pow(static_cast<double>(m.degree()), k);
}

}  // namespace

TEST_CASE("Green value of a far point matches the deep-iteration oracle") {
  const MapSpec m = fixtures::horseshoe();
  const CPoint p{Cplx(0.0), Cplx(1e8)};
  const GreenEval g = regal::green_plus(m, p);
  CHECK(g.escaped);
  CHECK(g.value > 0.0);
  CHECK(std::abs(g.value - green_oracle(m, p)) < 1e-6);

  const auto pts = regal::random_seeds(2, 4.0, 200, 12, 51);
  for (const CPoint& q : pts) {
    const GreenEval gq = regal::green_plus(m, q);
    if (!gq.escaped) continue;
    CHECK(std::abs(gq.value - green_oracle(m, q)) < 1e-6);
  }
}

TEST_CASE("Green is nonnegative and zero exactly on bounded orbits") {
  const MapSpec m = fixtures::horseshoe();
  const auto pts = regal::random_seeds(2, 5.0, 500, 3, 52);
  for (const CPoint& p : pts) {
    const GreenEval g = regal::green_plus(m, p);
    CHECK(g.value >= 0.0);
    if (!g.escaped) {
      CHECK(g.value == 0.0);
      CHECK(g.budget_limited);
    } else {
      CHECK(g.value > 0.0);
    }
  }
}

TEST_CASE("Functional equation G+(f p) = d G+(p) on escaping points") {
  const MapSpec m = fixtures::horseshoe();
  const auto pts = regal::random_seeds(2, 4.0, 150, 8, 53);
  int tested = 0;
  for (const CPoint& p : pts) {
    const GreenEval g = regal::green_plus(m, p);
    if (!g.escaped) continue;
    const GreenEval gf = regal::green_plus(m, m.eval_forward(p));
    CHECK(std::abs(gf.value - 2.0 * g.value) < 1e-6);
    ++tested;
  }
  CHECK(tested >= 100);
}

TEST_CASE("Saddle points give budget-limited zero below the drift horizon") {
  const MapSpec m = fixtures::horseshoe();
  const auto c1 = regal::find_periodic_points(m, 1, regal::grid_seeds(4.0, 80), {});
  REQUIRE(c1.cycles.size() == 2);
  GreenOptions certify;
  certify.budget = 15;
  for (const auto& cy : c1.cycles) {
    const GreenEval g = regal::green_plus(m, cy.representative(), certify);
    CHECK(g.value == 0.0);
    CHECK(g.budget_limited);
    const GreenEval gm = regal::green_minus(m, cy.representative(), certify);
    CHECK(gm.value == 0.0);
    CHECK(gm.budget_limited);
  }
}

TEST_CASE("Green- detects backward escape") {
  const MapSpec m = fixtures::horseshoe();
  // (1e8, 0) sits deep in V+; its backward orbit blows up.
  const GreenEval gm = regal::green_minus(m, CPoint{Cplx(1e8), Cplx(0.0)});
  CHECK(gm.escaped);
  CHECK(gm.value > 0.0);
}

TEST_CASE("Raising big_radius moves the value less than the reported truncation error") {
  const MapSpec m = fixtures::horseshoe();
  GreenOptions lo, hi;
  lo.big_radius = 1e10;
  hi.big_radius = 1e12;
  const auto pts = regal::random_seeds(2, 4.0, 100, 21, 54);
  for (const CPoint& p : pts) {
    const GreenEval a = regal::green_plus(m, p, lo);
    if (!a.escaped) continue;
    const GreenEval b = regal::green_plus(m, p, hi);
    if (!b.escaped) continue;
    CHECK(std::abs(a.value - b.value) <= a.trunc_error + 1e-15);
  }
}

TEST_CASE("Green rejects degenerate options") {
  const MapSpec m = fixtures::horseshoe();
  GreenOptions bad;
  bad.budget = 0;
  CHECK_THROWS(regal::green_plus(m, CPoint{Cplx(0.0), Cplx(0.0)}, bad));
  GreenOptions badr;
  badr.big_radius = 0.5;
  CHECK_THROWS(regal::green_plus(m, CPoint{Cplx(0.0), Cplx(0.0)}, badr));
}

TEST_CASE("Holder diagnostic fits a positive exponent across J+") {
  const MapSpec m = fixtures::horseshoe();
  const auto c1 = regal::find_periodic_points(m, 1, regal::grid_seeds(4.0, 80), {});
  REQUIRE_FALSE(c1.cycles.empty());
  const CPoint inside = c1.cycles[0].representative();  // on K+ up to polish error
  const CPoint outside{Cplx(0.0), Cplx(9.0)};

  const auto fit16 = regal::holder_exponent_estimate(m, inside, outside, 16);
  CHECK(fit16.exponent > 0.0);
  CHECK(fit16.exponent <= 2.0);
  CHECK(fit16.samples.size() >= 3);

  // Doubling the sampling depth should barely move the fitted slope.
  const auto fit32 = regal::holder_exponent_estimate(m, inside, outside, 32);
  CHECK(std::abs(fit32.exponent - fit16.exponent) < 0.05);

  // Segments that never leave K+ (or never touch it) are rejected.
  CHECK_THROWS(regal::holder_exponent_estimate(m, CPoint{Cplx(0.0), Cplx(8.0)}, outside, 16));
}
