#include <doctest.h>

#include <cmath>
#include <complex>
#include <vector>

#include "fixtures.hpp"
#include "regal/map.hpp"
#include "regal/orbit.hpp"

using regal::CMatrix;
using regal::Cplx;
using regal::CPoint;
using regal::dist_inf;
using regal::MapSpec;
using regal::Poly1;

namespace {

// Central-difference complex Jacobian: a real step along each coordinate
// recovers the holomorphic derivative to O(h^2).
CMatrix fd_jacobian(const MapSpec& m, const CPoint& p, double h = 1e-6) {
  const int n = m.n();
  CMatrix J(n, n);
  for (int j = 0; j < n; ++j) {
    CPoint hi = p, lo = p;
    hi.z[j] += h;
    lo.z[j] -= h;
    const CPoint fhi = m.eval_forward(hi), flo = m.eval_forward(lo);
    for (int i = 0; i < n; ++i) J(i, j) = (fhi.z[i] - flo.z[i]) / (2.0 * h);
  }
  return J;
}

double matrix_gap(const CMatrix& a, const CMatrix& b) {
  double g = 0.0;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) g = std::max(g, std::abs(a(i, j) - b(i, j)));
  return g;
}

}  // namespace

TEST_CASE("Henon stage maps (0,0) to (0,-6)") {
  const MapSpec m = fixtures::horseshoe();
  const CPoint img = m.eval_forward(CPoint{Cplx(0.0), Cplx(0.0)});
  CHECK(std::abs(img.z[0]) < 1e-15);
  CHECK(std::abs(img.z[1] - Cplx(-6.0)) < 1e-15);
}

TEST_CASE("Inverse round trips hold in both directions for every family") {
  for (const MapSpec& m : fixtures::all_families()) {
    const auto pts = regal::random_seeds(m.n(), 5.0, 2000, 42, 3);
    double worst = 0.0;
    for (const CPoint& p : pts) {
      worst = std::max(worst, dist_inf(m.eval_inverse(m.eval_forward(p)), p));
      worst = std::max(worst, dist_inf(m.eval_forward(m.eval_inverse(p)), p));
    }
    INFO(m.describe());
    // The degree-6 two-stage composition reaches |f(p)| ~ 1e6 on the radius-5
    // ball, so unwinding it loses ~6 digits to cancellation; single-stage
    // families stay well conditioned.
    CHECK(worst < (m.degree() > 4 ? 2e-8 : 1e-9));
  }
}

TEST_CASE("Analytic Jacobians match central differences at random points") {
  for (const MapSpec& m : fixtures::all_families()) {
    const auto pts = regal::random_seeds(m.n(), 2.0, 10, 7, 11);
    for (const CPoint& p : pts) {
      INFO(m.describe());
      CHECK(matrix_gap(m.jacobian(p), fd_jacobian(m, p)) < 1e-6);
    }
  }
}

TEST_CASE("Inverse Jacobian inverts the forward Jacobian") {
  for (const MapSpec& m : fixtures::all_families()) {
    const CPoint p = regal::random_seeds(m.n(), 1.5, 1, 19, 23).front();
    const CPoint fp = m.eval_forward(p);
    const CMatrix prod = m.inverse_jacobian(fp) * m.jacobian(p);
    CHECK(matrix_gap(prod, CMatrix::Identity(m.n(), m.n())) < 1e-8);
  }
}

TEST_CASE("det Df is constant and equals the stage product") {
  const MapSpec one = fixtures::henon(0.37, -1.2);
  CHECK(std::abs(one.det_df() - Cplx(0.37)) < 1e-14);

  const MapSpec m = fixtures::two_stage();
  const Cplx expected = Cplx(0.3) * Cplx(0.5, 0.25);
  CHECK(std::abs(m.det_df() - expected) < 1e-14);
  CHECK(std::abs(std::abs(m.det_df()) - 0.3 * std::abs(Cplx(0.5, 0.25))) < 1e-12);

  for (const MapSpec& f : fixtures::all_families()) {
    const auto pts = regal::random_seeds(f.n(), 3.0, 50, 5, 31);
    for (const CPoint& p : pts)
      CHECK(std::abs(f.jacobian(p).determinant() - f.det_df()) < 1e-9);
  }
}

TEST_CASE("Chain rule: composition Jacobian equals the stage product") {
  const Poly1 p1 = Poly1::quadratic(Cplx(1.0), Cplx(0.0), Cplx(-6.0));
  const Poly1 p2({Cplx(-1.0), Cplx(0.5), Cplx(0.0), Cplx(1.0)});
  const MapSpec s1 = MapSpec::build_henon_composition({{p1, Cplx(0.3)}});
  const MapSpec s2 = MapSpec::build_henon_composition({{p2, Cplx(0.5, 0.25)}});
  const MapSpec comp = fixtures::two_stage();

  const CPoint p{Cplx(0.4, -0.2), Cplx(-1.1, 0.6)};
  const CPoint mid = s1.eval_forward(p);
  CHECK(dist_inf(comp.eval_forward(p), s2.eval_forward(mid)) < 1e-12);
  CHECK(matrix_gap(comp.jacobian(p), s2.jacobian(mid) * s1.jacobian(p)) < 1e-9);
}

TEST_CASE("Degree bookkeeping and the regularity relation") {
  const MapSpec h = fixtures::horseshoe();
  CHECK(h.degree() == 2);
  CHECK(h.inverse_degree() == 2);
  REQUIRE(h.regularity_index().has_value());
  CHECK(*h.regularity_index() == 1);

  const MapSpec t = fixtures::two_stage();
  CHECK(t.degree() == 6);
  CHECK(t.inverse_degree() == 6);
  CHECK(*t.regularity_index() == 1);

  for (const MapSpec& m : fixtures::all_families()) {
    if (!m.regularity_index()) continue;
    const int l = *m.regularity_index();
    // d^l == (d^-)^(n-l) exactly in integer arithmetic.
    long long lhs = 1, rhs = 1;
    for (int i = 0; i < l; ++i) lhs *= m.degree();
    for (int i = 0; i < m.n() - l; ++i) rhs *= m.inverse_degree();
    CHECK(lhs == rhs);
  }
}

TEST_CASE("H1 fixture reports the 3D degree pattern") {
  const MapSpec m = fixtures::h1();
  CHECK(m.n() == 3);
  CHECK(m.degree() == 2);
  CHECK(m.inverse_degree() == 4);
  REQUIRE(m.regularity_index().has_value());
  CHECK(*m.regularity_index() == 2);
  CHECK(m.indeterminacy_minus().known);
  CHECK(m.indeterminacy_minus().dim == 1);
  CHECK(m.indeterminacy_plus().known);
  CHECK(m.indeterminacy_plus().dim == 0);
  CHECK(m.regular());
}

TEST_CASE("Henon indeterminacy sets are distinct points at infinity") {
  const MapSpec m = fixtures::horseshoe();
  CHECK(m.indeterminacy_plus().known);
  CHECK(m.indeterminacy_plus().dim == 0);
  CHECK(m.indeterminacy_minus().known);
  CHECK(m.indeterminacy_minus().dim == 0);
  CHECK(m.indeterminacy_plus().vanishing != m.indeterminacy_minus().vanishing);
  CHECK(m.regular());
}

TEST_CASE("Shift-like in C^3 reports the failed degree relation") {
  const MapSpec m = fixtures::shift3();
  CHECK(m.n() == 3);
  CHECK(m.degree() == 2);
  CHECK(m.inverse_degree() == 2);
  CHECK_FALSE(m.regularity_index().has_value());
  CHECK_FALSE(m.warnings().empty());
}

TEST_CASE("Shift-like in C^2 coincides with a Henon stage") {
  const Poly1 p = Poly1::quadratic(Cplx(1.0), Cplx(0.0), Cplx(-1.3));
  const MapSpec s = MapSpec::build_shift_like(2, p, Cplx(0.4));
  // (z1, z2) -> (z2, p(z2) + a z1) is the Henon stage with a' = -a.
  const MapSpec h = MapSpec::build_henon_composition({{p, Cplx(-0.4)}});
  const CPoint q{Cplx(0.7, 0.1), Cplx(-0.5, 0.9)};
  CHECK(dist_inf(s.eval_forward(q), h.eval_forward(q)) < 1e-14);
  REQUIRE(s.regularity_index().has_value());
  CHECK(*s.regularity_index() == 1);
}

TEST_CASE("Builders reject degenerate parameters") {
  const Poly1 q = Poly1::quadratic(Cplx(1.0), Cplx(0.0), Cplx(-1.0));
  CHECK_THROWS(MapSpec::build_henon_composition({{q, Cplx(0.0)}}));
  CHECK_THROWS(MapSpec::build_henon_composition({}));
  CHECK_THROWS(MapSpec::build_shift_like(3, q, Cplx(0.0)));
  CHECK_THROWS(MapSpec::build_shift_like(1, q, Cplx(1.0)));
  CHECK_THROWS(MapSpec::build_fornaess_wu(1, fixtures::generic_p_table(), q, Cplx(0.0)));
  CHECK_THROWS(MapSpec::build_fornaess_wu(2, fixtures::generic_p_table(), q, Cplx(1.0),
                                          Cplx(0.0)));
  CHECK_THROWS(MapSpec::build_fornaess_wu(3, fixtures::generic_p_table(), q, Cplx(1.0)));
  // Henon stages require deg p >= 2: a linear p must be rejected.
  CHECK_THROWS(MapSpec::build_henon_composition({{Poly1({Cplx(0.0), Cplx(1.0)}), Cplx(1.0)}}));
}

TEST_CASE("Huge inputs set the escaped flag instead of propagating NaN") {
  const MapSpec m = fixtures::horseshoe();
  CPoint p{Cplx(1e90), Cplx(1e90)};
  const CPoint img = m.eval_forward(p);
  CHECK(img.escaped);
  CHECK(regal::all_finite(img));
  // Iterating an escaped point is a no-op rather than an error.
  const CPoint img2 = m.eval_forward(img);
  CHECK(img2.escaped);
}

TEST_CASE("iterate composes the map k times") {
  const MapSpec m = fixtures::horseshoe();
  const CPoint p{Cplx(0.3, 0.1), Cplx(-0.2, 0.4)};
  CPoint q = p;
  for (int i = 0; i < 4; ++i) q = m.eval_forward(q);
  CHECK(dist_inf(m.iterate(p, 4), q) < 1e-12);
  CHECK(dist_inf(m.iterate(p, -4), m.eval_inverse(m.eval_inverse(m.eval_inverse(m.eval_inverse(p))))) <
        1e-12);
  CHECK(dist_inf(m.iterate(p, 0), p) == 0.0);
}
