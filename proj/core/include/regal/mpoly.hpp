#pragma once
// Sparse multivariate polynomial over C, keyed by exponent vectors.
//
// Used only for exact degree bookkeeping and leading-homogeneous-part
// analysis of the built-in map families (degrees stay tiny), never for
// numerical evaluation of orbits.

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "regal/types.hpp"

namespace regal {

class MPoly {
 public:
  using Expo = std::vector<int>;

  explicit MPoly(int nvars = 0) : nvars_(nvars) {}

  static MPoly constant(int nvars, Cplx c);
  static MPoly variable(int nvars, int index);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Expo, Cplx>& terms() const { return terms_; }

  void add_term(const Expo& e, Cplx c);

  MPoly operator+(const MPoly& o) const;
  MPoly operator-(const MPoly& o) const;
  MPoly operator*(const MPoly& o) const;
  MPoly operator*(Cplx s) const;
  MPoly pow(int k) const;

  // Substitute args[i] for variable i (classic composition). All args must
  // share a variable count, which becomes the result's variable count.
  MPoly substitute(const std::vector<MPoly>& args) const;

  // Total degree; -1 for the zero polynomial.
  int total_degree() const;
  // Largest exponent of variable i appearing with a nonzero coefficient.
  int degree_in(int var) const;
  // Sum of terms of exact total degree d.
  MPoly homogeneous_part(int d) const;
  // Substitute 0 for each listed variable.
  MPoly with_vars_zeroed(const std::vector<int>& vars) const;
  // If the polynomial is exactly c * x_i^k (k >= 1), return (i, k).
  std::optional<std::pair<int, int>> as_monomial_power() const;

  Cplx eval(const std::vector<Cplx>& x) const;

 private:
  int nvars_;
  std::map<Expo, Cplx> terms_;  // ordered map => deterministic iteration
};

}  // namespace regal
