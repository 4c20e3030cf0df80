#pragma once
// Basic value types shared across the library: complex phase-space points
// with an explicit overflow flag, norms, and canonical orderings.

#include <complex>
#include <cmath>
#include <cstdint>
#include <vector>

namespace regal {

using Cplx = std::complex<double>;

// Any coordinate beyond this modulus is treated as "escaped to infinity".
// Downstream code must stop iterating once the flag is set instead of
// propagating inf/NaN through further arithmetic.
inline constexpr double kEscapeThreshold = 1e100;

struct CPoint {
  std::vector<Cplx> z;
  bool escaped = false;

  CPoint() = default;
  explicit CPoint(std::vector<Cplx> coords) : z(std::move(coords)) {}
  CPoint(std::initializer_list<Cplx> coords) : z(coords) {}

  int n() const { return static_cast<int>(z.size()); }
};

// Max-coordinate norm: all escape radii and Green-function logs use this norm.
inline double norm_inf(const CPoint& p) {
  double m = 0.0;
  for (const Cplx& c : p.z) m = std::max(m, std::abs(c));
  return m;
}

inline double dist_inf(const CPoint& a, const CPoint& b) {
  double m = 0.0;
  for (size_t i = 0; i < a.z.size(); ++i) m = std::max(m, std::abs(a.z[i] - b.z[i]));
  return m;
}

inline bool all_finite(const CPoint& p) {
  for (const Cplx& c : p.z)
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) return false;
  return true;
}

// Sets the escaped flag if any coordinate is non-finite or beyond the
// threshold. Returns the (possibly flagged) point.
inline CPoint& check_escape(CPoint& p, double threshold = kEscapeThreshold) {
  if (p.escaped) return p;
  for (const Cplx& c : p.z) {
    double ar = std::fabs(c.real()), ai = std::fabs(c.imag());
    if (!(ar <= threshold) || !(ai <= threshold)) {  // catches NaN too
      p.escaped = true;
      return p;
    }
  }
  return p;
}

// Canonical total order: real part then imaginary part, coordinate by
// coordinate. Used to pick cycle representatives and to make parallel
// reductions order-independent.
inline bool lex_less(const CPoint& a, const CPoint& b) {
  for (size_t i = 0; i < a.z.size(); ++i) {
    if (a.z[i].real() != b.z[i].real()) return a.z[i].real() < b.z[i].real();
    if (a.z[i].imag() != b.z[i].imag()) return a.z[i].imag() < b.z[i].imag();
  }
  return false;
}

}  // namespace regal
