#include "regal/poly1.hpp"

#include <stdexcept>

namespace regal {

Poly1::Poly1(std::vector<Cplx> coeffs) : c_(std::move(coeffs)) {
  if (c_.size() < 2) throw std::invalid_argument("Poly1: degree must be at least 1");
  if (c_.back() == Cplx(0.0, 0.0))
    throw std::invalid_argument("Poly1: leading coefficient must be nonzero");
}

Cplx Poly1::eval(Cplx z) const {
  Cplx acc = c_.back();
  for (int i = static_cast<int>(c_.size()) - 2; i >= 0; --i) acc = acc * z + c_[i];
  return acc;
}

Cplx Poly1::eval_deriv(Cplx z) const {
  int m = degree();
  Cplx acc = c_.back() * static_cast<double>(m);
  for (int i = m - 1; i >= 1; --i) acc = acc * z + c_[i] * static_cast<double>(i);
  return acc;
}

}  // namespace regal
