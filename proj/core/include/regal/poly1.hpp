#pragma once
// Dense univariate polynomial over C with nonzero leading coefficient.

#include <vector>

#include "regal/types.hpp"

namespace regal {

class Poly1 {
 public:
  // coeffs = c_0, c_1, ..., c_m (ascending powers); requires m >= 1 and c_m != 0.
  explicit Poly1(std::vector<Cplx> coeffs);

  // Convenience for z^2 + c style tests.
  static Poly1 quadratic(Cplx c2, Cplx c1, Cplx c0) { return Poly1({c0, c1, c2}); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Cplx>& coeffs() const { return c_; }
  Cplx leading() const { return c_.back(); }

  Cplx eval(Cplx z) const;        // Horner
  Cplx eval_deriv(Cplx z) const;  // p'(z)

 private:
  std::vector<Cplx> c_;
};

}  // namespace regal
