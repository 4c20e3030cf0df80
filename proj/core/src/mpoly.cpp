#include "regal/mpoly.hpp"

#include <numeric>
#include <stdexcept>

namespace regal {

MPoly MPoly::constant(int nvars, Cplx c) {
  MPoly p(nvars);
  p.add_term(Expo(nvars, 0), c);
  return p;
}

MPoly MPoly::variable(int nvars, int index) {
  if (index < 0 || index >= nvars) throw std::invalid_argument("MPoly::variable: bad index");
  MPoly p(nvars);
  Expo e(nvars, 0);
  e[index] = 1;
  p.add_term(e, Cplx(1.0, 0.0));
  return p;
}

void MPoly::add_term(const Expo& e, Cplx c) {
  if (static_cast<int>(e.size()) != nvars_)
    throw std::invalid_argument("MPoly::add_term: exponent arity mismatch");
  if (c == Cplx(0.0, 0.0)) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
  } else {
    it->second += c;
    if (it->second == Cplx(0.0, 0.0)) terms_.erase(it);  // exact cancellation only
  }
}

MPoly MPoly::operator+(const MPoly& o) const {
  MPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

MPoly MPoly::operator-(const MPoly& o) const {
  MPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
  return r;
}

MPoly MPoly::operator*(const MPoly& o) const {
  MPoly r(nvars_);
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      Expo e(nvars_);
      for (int i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

MPoly MPoly::operator*(Cplx s) const {
  MPoly r(nvars_);
  if (s == Cplx(0.0, 0.0)) return r;
  for (const auto& [e, c] : terms_) r.add_term(e, c * s);
  return r;
}

MPoly MPoly::pow(int k) const {
  if (k < 0) throw std::invalid_argument("MPoly::pow: negative exponent");
  MPoly r = MPoly::constant(nvars_, Cplx(1.0, 0.0));
  for (int i = 0; i < k; ++i) r = r * (*this);
  return r;
}

MPoly MPoly::substitute(const std::vector<MPoly>& args) const {
  if (static_cast<int>(args.size()) != nvars_)
    throw std::invalid_argument("MPoly::substitute: arity mismatch");
  int out_vars = args.empty() ? 0 : args.front().nvars();
  MPoly r(out_vars);
  for (const auto& [e, c] : terms_) {
    MPoly term = MPoly::constant(out_vars, c);
    for (int i = 0; i < nvars_; ++i)
      if (e[i] > 0) term = term * args[i].pow(e[i]);
    r = r + term;
  }
  return r;
}

int MPoly::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) {
    (void)c;
    d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
  }
  return d;
}

int MPoly::degree_in(int var) const {
  int d = 0;
  for (const auto& [e, c] : terms_) {
    (void)c;
    d = std::max(d, e[var]);
  }
  return d;
}

MPoly MPoly::homogeneous_part(int d) const {
  MPoly r(nvars_);
  for (const auto& [e, c] : terms_)
    if (std::accumulate(e.begin(), e.end(), 0) == d) r.add_term(e, c);
  return r;
}

MPoly MPoly::with_vars_zeroed(const std::vector<int>& vars) const {
  MPoly r(nvars_);
  for (const auto& [e, c] : terms_) {
    bool kill = false;
    for (int v : vars)
      if (e[v] > 0) {
        kill = true;
        break;
      }
    if (!kill) r.add_term(e, c);
  }
  return r;
}

std::optional<std::pair<int, int>> MPoly::as_monomial_power() const {
  if (terms_.size() != 1) return std::nullopt;
  const auto& [e, c] = *terms_.begin();
  (void)c;
  int var = -1, k = 0;
  for (int i = 0; i < nvars_; ++i) {
    if (e[i] > 0) {
      if (var >= 0) return std::nullopt;  // involves two variables
      var = i;
      k = e[i];
    }
  }
  if (var < 0) return std::nullopt;  // constant
  return std::make_pair(var, k);
}

Cplx MPoly::eval(const std::vector<Cplx>& x) const {
  Cplx acc(0.0, 0.0);
  for (const auto& [e, c] : terms_) {
    Cplx t = c;
    for (int i = 0; i < nvars_; ++i)
      for (int j = 0; j < e[i]; ++j) t *= x[i];
    acc += t;
  }
  return acc;
}

}  // namespace regal
