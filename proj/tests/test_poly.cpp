#include <doctest.h>

#include <cmath>
#include <complex>

#include "regal/mpoly.hpp"
#include "regal/poly1.hpp"

using regal::Cplx;
using regal::MPoly;
using regal::Poly1;

TEST_CASE("Poly1 evaluates by Horner and differentiates") {
  const Poly1 p({Cplx(-6.0), Cplx(0.0), Cplx(1.0)});  // y^2 - 6
  CHECK(p.degree() == 2);
  const Cplx z(1.5, -0.25);
  CHECK(std::abs(p.eval(z) - (z * z - 6.0)) < 1e-12);
  CHECK(std::abs(p.eval_deriv(z) - 2.0 * z) < 1e-12);

  const Poly1 cubic({Cplx(1.0), Cplx(-2.0), Cplx(0.0), Cplx(0.5, 0.25)});
  const Cplx w(0.3, 0.7);
  const Cplx direct = Cplx(0.5, 0.25) * w * w * w - 2.0 * w + 1.0;
  CHECK(std::abs(cubic.eval(w) - direct) < 1e-12);
  CHECK(std::abs(cubic.eval_deriv(w) - (3.0 * Cplx(0.5, 0.25) * w * w - 2.0)) < 1e-12);
}

TEST_CASE("Poly1 quadratic helper orders coefficients ascending") {
  const Poly1 q = Poly1::quadratic(Cplx(1.0), Cplx(0.0), Cplx(-6.0));
  CHECK(q.degree() == 2);
  CHECK(q.coeffs()[0] == Cplx(-6.0));
  CHECK(q.coeffs()[2] == Cplx(1.0));
  CHECK(q.leading() == Cplx(1.0));
}

TEST_CASE("Poly1 rejects degenerate coefficient lists") {
  CHECK_THROWS(Poly1({Cplx(3.0)}));                        // constant: degree 0
  CHECK_THROWS(Poly1({Cplx(1.0), Cplx(2.0), Cplx(0.0)}));  // zero leading coefficient
  CHECK_THROWS(Poly1(std::vector<Cplx>{}));
}

TEST_CASE("MPoly arithmetic expands (x + y)^2") {
  const MPoly x = MPoly::variable(2, 0);
  const MPoly y = MPoly::variable(2, 1);
  const MPoly s = (x + y).pow(2);
  CHECK(s.total_degree() == 2);
  CHECK(s.degree_in(0) == 2);
  CHECK(s.degree_in(1) == 2);
  const std::vector<Cplx> at{Cplx(1.5, 0.5), Cplx(-0.75, 2.0)};
  const Cplx sum = at[0] + at[1];
  CHECK(std::abs(s.eval(at) - sum * sum) < 1e-12);
  CHECK(s.terms().size() == 3);  // x^2, 2xy, y^2
}

TEST_CASE("MPoly substitution multiplies degrees") {
  const MPoly x = MPoly::variable(2, 0);
  const MPoly y = MPoly::variable(2, 1);
  const MPoly inner = x * x + y;          // degree 2
  const MPoly outer = x.pow(3) + y * y;   // degree 3 in x
  const MPoly comp = outer.substitute({inner, y});
  CHECK(comp.total_degree() == 6);
  const std::vector<Cplx> at{Cplx(0.5, -0.25), Cplx(1.25, 0.75)};
  const Cplx iv = at[0] * at[0] + at[1];
  CHECK(std::abs(comp.eval(at) - (iv * iv * iv + at[1] * at[1])) < 1e-10);
}

TEST_CASE("MPoly homogeneous parts and zeroing") {
  const MPoly x = MPoly::variable(2, 0);
  const MPoly y = MPoly::variable(2, 1);
  const MPoly p = x * x + x * y + y + MPoly::constant(2, Cplx(4.0));
  const MPoly top = p.homogeneous_part(2);
  CHECK(top.total_degree() == 2);
  CHECK(top.terms().size() == 2);  // x^2 + xy
  const MPoly zeroed = p.with_vars_zeroed({0});
  CHECK(zeroed.degree_in(0) <= 0);
  const std::vector<Cplx> at{Cplx(0.0), Cplx(2.0, 1.0)};
  CHECK(std::abs(zeroed.eval(at) - (at[1] + 4.0)) < 1e-12);
}

TEST_CASE("MPoly recognizes monomial powers") {
  const MPoly y = MPoly::variable(3, 1);
  const MPoly m = y.pow(4) * Cplx(2.5);
  const auto mono = m.as_monomial_power();
  REQUIRE(mono.has_value());
  CHECK(mono->first == 1);
  CHECK(mono->second == 4);
  const MPoly mixed = y.pow(2) + MPoly::variable(3, 0);
  CHECK_FALSE(mixed.as_monomial_power().has_value());
}

TEST_CASE("MPoly zero polynomial conventions") {
  const MPoly z(2);
  CHECK(z.is_zero());
  CHECK(z.total_degree() == -1);
  const MPoly x = MPoly::variable(2, 0);
  CHECK((x - x).is_zero());
}
