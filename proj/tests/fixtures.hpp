#pragma once
// Shared map fixtures for the unit and acceptance suites.

#include <vector>

#include "regal/map.hpp"
#include "regal/poly1.hpp"

namespace fixtures {

using regal::Cplx;
using regal::MapSpec;
using regal::Poly1;

// Single Hénon stage h(x, y) = (y, y^2 + c - a x).
inline MapSpec henon(double a, double c) {
  return MapSpec::build_henon_composition(
      {{Poly1::quadratic(Cplx(1.0), Cplx(0.0), Cplx(c)), Cplx(a)}});
}

// Volume-preserving horseshoe: p(y) = y^2 - 6, a = 1.
inline MapSpec horseshoe() { return henon(1.0, -6.0); }

// Quadratic-then-cubic composition, complex second stage determinant.
inline MapSpec two_stage() {
  const Poly1 p1 = Poly1::quadratic(Cplx(1.0), Cplx(0.0), Cplx(-6.0));
  const Poly1 p2({Cplx(-1.0), Cplx(0.5), Cplx(0.0), Cplx(1.0)});  // y^3 + 0.5y - 1
  return MapSpec::build_henon_composition({{p1, Cplx(0.3)}, {p2, Cplx(0.5, 0.25)}});
}

inline std::vector<std::vector<Cplx>> generic_p_table() {
  std::vector<std::vector<Cplx>> P(3, std::vector<Cplx>(3, Cplx(0.0)));
  P[0][0] = Cplx(0.1);
  P[1][0] = Cplx(0.2);   // x
  P[0][1] = Cplx(-0.4);  // y
  P[2][0] = Cplx(1.0);   // x^2
  P[1][1] = Cplx(0.3);   // xy
  P[0][2] = Cplx(0.7);   // y^2
  return P;
}

// Three-dimensional quadratic form 1: (P(x,y) + a z, Q(y) + x, y).
inline MapSpec h1() {
  return MapSpec::build_fornaess_wu(1, generic_p_table(),
                                    Poly1::quadratic(Cplx(1.0), Cplx(0.2), Cplx(-0.8)),
                                    Cplx(1.1, -0.3));
}

// Form 2: (P(x,y) + a z, Q(x) + b y, x).
inline MapSpec h2() {
  return MapSpec::build_fornaess_wu(2, generic_p_table(),
                                    Poly1::quadratic(Cplx(1.0), Cplx(0.2), Cplx(-0.8)),
                                    Cplx(0.9, 0.2), Cplx(0.7, -0.1));
}

// Shift-like in C^3 with a quadratic shift polynomial.
inline MapSpec shift3() {
  return MapSpec::build_shift_like(3, Poly1::quadratic(Cplx(1.0), Cplx(0.0), Cplx(-0.9)),
                                   Cplx(0.8));
}

inline std::vector<MapSpec> all_families() {
  return {horseshoe(), two_stage(), h1(), h2(), shift3()};
}

}  // namespace fixtures
