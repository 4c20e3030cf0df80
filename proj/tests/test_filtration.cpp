#include <doctest.h>

#include <cmath>

#include "fixtures.hpp"
#include "regal/filtration.hpp"
#include "regal/orbit.hpp"

using regal::CPoint;
using regal::Cplx;
using regal::FiltrationSpec;
using regal::MapSpec;
using regal::Region;

TEST_CASE("Bidisk regions classify the canonical examples") {
  const MapSpec m = fixtures::horseshoe();
  const FiltrationSpec fs = regal::default_regions(m, 5.0);
  CHECK(fs.classify(CPoint{Cplx(0.0), Cplx(10.0)}) == Region::Vminus);
  CHECK(fs.classify(CPoint{Cplx(10.0), Cplx(0.0)}) == Region::Vplus);
  CHECK(fs.classify(CPoint{Cplx(1.0), Cplx(1.0)}) == Region::V);
  // Ties |x| = |y| > R belong to Vminus so the partition is total.
  CHECK(fs.classify(CPoint{Cplx(6.0), Cplx(-6.0)}) == Region::Vminus);
  // Escaped points count as forward escape.
  CPoint big{Cplx(1e200), Cplx(0.0)};
  regal::check_escape(big);
  CHECK(fs.classify(big) == Region::Vminus);
}

TEST_CASE("Region classification is a deterministic total partition") {
  const MapSpec m = fixtures::horseshoe();
  const FiltrationSpec fs = regal::default_regions(m, 3.0);
  const auto pts = regal::random_seeds(2, 8.0, 2000, 11, 13);
  for (const CPoint& p : pts) {
    const Region r = fs.classify(p);
    CHECK(fs.classify(p) == r);  // deterministic
    // n = 2 rule, spelled out independently of the implementation.
    const double ax = std::abs(p.z[0]), ay = std::abs(p.z[1]);
    Region expect = Region::V;
    if (ay > 3.0 && ay >= ax)
      expect = Region::Vminus;
    else if (ax > 3.0 && ax > ay)
      expect = Region::Vplus;
    CHECK(r == expect);
  }
}

TEST_CASE("Accepted radius passes verification, tiny radius fails with witness") {
  const MapSpec m = fixtures::horseshoe();
  const FiltrationSpec fs = regal::choose_filtration(m, {});
  CHECK(fs.R <= 10.0);  // the search should accept a one-digit radius here

  regal::VerifyOptions vo;
  vo.samples = 20000;
  vo.iters = 8;
  vo.seed = 99;
  const auto report = regal::verify_filtration(m, fs, vo);
  CHECK(report.total_violations() == 0);
  CHECK(report.properties.size() == 6);
  // The four region-invariance properties see plenty of samples. The two
  // bounded-orbit properties can legitimately check zero points here: this
  // horseshoe's bounded set is a Cantor set that uniform sampling misses.
  for (const auto& prop : report.properties)
    if (prop.name.find("bounded") == std::string::npos) CHECK(prop.checked > 0);

  const FiltrationSpec bad = regal::default_regions(m, 0.1);
  const auto negative = regal::verify_filtration(m, bad, vo);
  CHECK(negative.total_violations() >= 1);
  bool witness = false;
  for (const auto& prop : negative.properties)
    if (prop.violations > 0 && prop.has_witness) witness = true;
  CHECK(witness);
}

TEST_CASE("Bounded-orbit approximant checks fire on a map with an attractor") {
  // Unlike the horseshoe, this map has a sink whose basin has positive
  // measure, so uniform sampling does land on forward-bounded points in V.
  const MapSpec m = fixtures::henon(0.3, -0.1);
  const FiltrationSpec fs = regal::choose_filtration(m, {});
  regal::VerifyOptions vo;
  vo.samples = 20000;
  vo.seed = 4;
  const auto rep = regal::verify_filtration(m, fs, vo);
  CHECK(rep.total_violations() == 0);
  bool saw_bounded_forward = false;
  for (const auto& prop : rep.properties)
    if (prop.name == "bounded_forward_stays_in_v" && prop.checked > 0) saw_bounded_forward = true;
  CHECK(saw_bounded_forward);
}

TEST_CASE("Verification is worker-count independent") {
  const MapSpec m = fixtures::horseshoe();
  const FiltrationSpec fs = regal::default_regions(m, 0.5);  // small R: plenty of violations
  regal::VerifyOptions a, b;
  a.samples = b.samples = 5000;
  a.seed = b.seed = 7;
  a.workers = 1;
  b.workers = 8;
  const auto ra = regal::verify_filtration(m, fs, a);
  const auto rb = regal::verify_filtration(m, fs, b);
  REQUIRE(ra.properties.size() == rb.properties.size());
  for (size_t i = 0; i < ra.properties.size(); ++i) {
    CHECK(ra.properties[i].violations == rb.properties[i].violations);
    CHECK(ra.properties[i].witness_index == rb.properties[i].witness_index);
  }
}

TEST_CASE("Radius search rejects degenerate requests") {
  const MapSpec m = fixtures::horseshoe();
  regal::RadiusSearchOptions opts;
  opts.R_init = 0.0;
  CHECK_THROWS(regal::choose_radius(m, opts));
}

TEST_CASE("A point deep in Vminus escapes monotonically") {
  const MapSpec m = fixtures::horseshoe();
  const FiltrationSpec fs = regal::choose_filtration(m, {});
  CPoint q{Cplx(0.0), Cplx(50.0)};
  REQUIRE(fs.classify(q) == Region::Vminus);
  bool crossed_threshold = false;
  for (int i = 0; i < 100; ++i) {
    q = m.eval_forward(q);
    CHECK(fs.classify(q) == Region::Vminus);  // forward invariance, 100 steps
    if (q.escaped) crossed_threshold = true;
  }
  CHECK(crossed_threshold);  // norm passed 1e100 within the window
}
