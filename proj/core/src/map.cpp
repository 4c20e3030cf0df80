#include "regal/map.hpp"

#include <cmath>
#include <set>
#include <sstream>
#include <stdexcept>

namespace regal {

std::string family_name(Family f) {
  switch (f) {
    case Family::HenonComposition: return "henon";
    case Family::FornaessWuH1: return "fw_h1";
    case Family::FornaessWuH2: return "fw_h2";
    case Family::ShiftLike: return "shift_like";
  }
  return "?";
}

std::string IndetDescriptor::to_string(int n) const {
  if (!known) return "unknown";
  std::ostringstream os;
  os << "{T=0";
  for (int v : vanishing) os << ", z" << (v + 1) << "=0";
  os << "} dim " << dim;
  (void)n;
  return os.str();
}

bool descriptors_disjoint(const IndetDescriptor& a, const IndetDescriptor& b, int n) {
  if (!a.known || !b.known) return false;
  std::set<int> u(a.vanishing.begin(), a.vanishing.end());
  u.insert(b.vanishing.begin(), b.vanishing.end());
  // Inside {T=0} ~ P^{n-1}, a coordinate subspace is empty iff every
  // homogeneous coordinate is forced to vanish.
  return static_cast<int>(u.size()) >= n;
}

IndetDescriptor indeterminacy_from_leads(const std::vector<MPoly>& leads, int n) {
  std::vector<int> zeroed;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const MPoly& lead : leads) {
      MPoly sub = lead.with_vars_zeroed(zeroed);
      if (sub.is_zero()) continue;
      if (auto mono = sub.as_monomial_power()) {
        zeroed.push_back(mono->first);
        std::sort(zeroed.begin(), zeroed.end());
        changed = true;
      }
    }
  }
  IndetDescriptor d;
  // Accept only if the collected coordinate conditions kill every lead;
  // otherwise the set is not a coordinate subspace and we report unknown.
  for (const MPoly& lead : leads)
    if (!lead.with_vars_zeroed(zeroed).is_zero()) return d;
  d.known = true;
  d.vanishing = zeroed;
  d.dim = n - 1 - static_cast<int>(zeroed.size());
  return d;
}

// ---------------------------------------------------------------------------
// helpers for the Fornaess-Wu coefficient table

namespace {

void validate_ptable(const std::vector<std::vector<Cplx>>& P) {
  if (P.size() != 3) throw std::invalid_argument("P table must be 3x3 (degree <= 2 per variable)");
  for (const auto& row : P)
    if (row.size() != 3)
      throw std::invalid_argument("P table must be 3x3 (degree <= 2 per variable)");
  int total = -1;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (P[i][j] != Cplx(0.0, 0.0)) total = std::max(total, i + j);
  if (total < 2) throw std::invalid_argument("P must have total degree at least 2");
}

Cplx ptable_eval(const std::vector<std::vector<Cplx>>& P, Cplx x, Cplx y) {
  Cplx xs[3] = {Cplx(1, 0), x, x * x};
  Cplx ys[3] = {Cplx(1, 0), y, y * y};
  Cplx acc(0, 0);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (P[i][j] != Cplx(0.0, 0.0)) acc += P[i][j] * xs[i] * ys[j];
  return acc;
}

Cplx ptable_dx(const std::vector<std::vector<Cplx>>& P, Cplx x, Cplx y) {
  Cplx ys[3] = {Cplx(1, 0), y, y * y};
  Cplx acc(0, 0);
  for (int i = 1; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (P[i][j] != Cplx(0.0, 0.0))
        acc += P[i][j] * static_cast<double>(i) * (i == 2 ? x : Cplx(1, 0)) * ys[j];
  return acc;
}

Cplx ptable_dy(const std::vector<std::vector<Cplx>>& P, Cplx x, Cplx y) {
  Cplx xs[3] = {Cplx(1, 0), x, x * x};
  Cplx acc(0, 0);
  for (int i = 0; i < 3; ++i)
    for (int j = 1; j < 3; ++j)
      if (P[i][j] != Cplx(0.0, 0.0))
        acc += P[i][j] * static_cast<double>(j) * (j == 2 ? y : Cplx(1, 0)) * xs[i];
  return acc;
}

MPoly ptable_mpoly(const std::vector<std::vector<Cplx>>& P, const MPoly& x, const MPoly& y) {
  int nv = x.nvars();
  MPoly acc(nv);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (P[i][j] != Cplx(0.0, 0.0)) acc = acc + x.pow(i) * y.pow(j) * P[i][j];
  return acc;
}

MPoly poly1_mpoly(const Poly1& p, const MPoly& x) {
  int nv = x.nvars();
  MPoly acc = MPoly::constant(nv, p.coeffs().back());
  for (int i = p.degree() - 1; i >= 0; --i) acc = acc * x + MPoly::constant(nv, p.coeffs()[i]);
  return acc;
}

}  // namespace

// ---------------------------------------------------------------------------
// builders

MapSpec MapSpec::build_henon_composition(std::vector<HenonStage> stages) {
  if (stages.empty()) throw std::invalid_argument("henon composition needs at least one stage");
  for (const auto& s : stages) {
    if (s.p.degree() < 2) throw std::invalid_argument("henon stage polynomial must have degree >= 2");
    if (s.a == Cplx(0.0, 0.0)) throw std::invalid_argument("henon stage parameter a must be nonzero");
  }
  MapSpec m;
  m.family_ = Family::HenonComposition;
  m.n_ = 2;
  m.stages_ = std::move(stages);
  m.delta_ = Cplx(1.0, 0.0);
  for (const auto& s : m.stages_) m.delta_ *= s.a;  // det of one stage is +a
  m.finalize_degrees_and_indeterminacy();
  return m;
}

MapSpec MapSpec::build_fornaess_wu(int form, const std::vector<std::vector<Cplx>>& P,
                                   const Poly1& Q, Cplx a, Cplx b) {
  if (form != 1 && form != 2) throw std::invalid_argument("fornaess-wu form must be 1 or 2");
  validate_ptable(P);
  if (Q.degree() != 2) throw std::invalid_argument("Q must have degree exactly 2");
  if (a == Cplx(0.0, 0.0)) throw std::invalid_argument("parameter a must be nonzero");
  if (form == 2 && b == Cplx(0.0, 0.0)) throw std::invalid_argument("parameter b must be nonzero");
  MapSpec m;
  m.family_ = form == 1 ? Family::FornaessWuH1 : Family::FornaessWuH2;
  m.n_ = 3;
  m.ptable_ = P;
  m.q_ = Q;
  m.a_ = a;
  m.b_ = b;
  m.delta_ = form == 1 ? a : -a * b;
  m.finalize_degrees_and_indeterminacy();
  return m;
}

MapSpec MapSpec::build_shift_like(int n, const Poly1& p, Cplx a) {
  if (n < 2) throw std::invalid_argument("shift-like maps need n >= 2");
  if (p.degree() < 2) throw std::invalid_argument("shift-like polynomial must have degree >= 2");
  if (a == Cplx(0.0, 0.0)) throw std::invalid_argument("parameter a must be nonzero");
  MapSpec m;
  m.family_ = Family::ShiftLike;
  m.n_ = n;
  m.shift_p_ = p;
  m.a_ = a;
  m.delta_ = ((n - 1) % 2 == 0 ? Cplx(1, 0) : Cplx(-1, 0)) * a;
  m.finalize_degrees_and_indeterminacy();
  return m;
}

// ---------------------------------------------------------------------------
// symbolic expansion

std::optional<std::vector<MPoly>> MapSpec::forward_components() const {
  switch (family_) {
    case Family::HenonComposition: {
      long long proj = 1;
      for (const auto& s : stages_) proj *= s.p.degree();
      if (proj > 64) return std::nullopt;  // keep expansions small
      std::vector<MPoly> c = {MPoly::variable(2, 0), MPoly::variable(2, 1)};
      for (const auto& s : stages_) {
        MPoly nx = c[1];
        MPoly ny = poly1_mpoly(s.p, c[1]) - c[0] * s.a;
        c = {nx, ny};
      }
      return c;
    }
    case Family::FornaessWuH1: {
      MPoly x = MPoly::variable(3, 0), y = MPoly::variable(3, 1), z = MPoly::variable(3, 2);
      return std::vector<MPoly>{ptable_mpoly(ptable_, x, y) + z * a_,
                                poly1_mpoly(q_, y) + x, y};
    }
    case Family::FornaessWuH2: {
      MPoly x = MPoly::variable(3, 0), y = MPoly::variable(3, 1), z = MPoly::variable(3, 2);
      return std::vector<MPoly>{ptable_mpoly(ptable_, x, y) + z * a_,
                                poly1_mpoly(q_, x) + y * b_, x};
    }
    case Family::ShiftLike: {
      std::vector<MPoly> c;
      for (int i = 1; i < n_; ++i) c.push_back(MPoly::variable(n_, i));
      c.push_back(poly1_mpoly(shift_p_, MPoly::variable(n_, n_ - 1)) + MPoly::variable(n_, 0) * a_);
      return c;
    }
  }
  return std::nullopt;
}

std::optional<std::vector<MPoly>> MapSpec::inverse_components() const {
  Cplx one(1.0, 0.0);
  switch (family_) {
    case Family::HenonComposition: {
      long long proj = 1;
      for (const auto& s : stages_) proj *= s.p.degree();
      if (proj > 64) return std::nullopt;
      std::vector<MPoly> c = {MPoly::variable(2, 0), MPoly::variable(2, 1)};
      for (auto it = stages_.rbegin(); it != stages_.rend(); ++it) {
        MPoly nx = (poly1_mpoly(it->p, c[0]) - c[1]) * (one / it->a);
        MPoly ny = c[0];
        c = {nx, ny};
      }
      return c;
    }
    case Family::FornaessWuH1: {
      MPoly u = MPoly::variable(3, 0), v = MPoly::variable(3, 1), w = MPoly::variable(3, 2);
      MPoly xp = v - poly1_mpoly(q_, w);
      MPoly zp = (u - ptable_mpoly(ptable_, xp, w)) * (one / a_);
      return std::vector<MPoly>{xp, w, zp};
    }
    case Family::FornaessWuH2: {
      MPoly u = MPoly::variable(3, 0), v = MPoly::variable(3, 1), w = MPoly::variable(3, 2);
      MPoly yp = (v - poly1_mpoly(q_, w)) * (one / b_);
      MPoly zp = (u - ptable_mpoly(ptable_, w, yp)) * (one / a_);
      return std::vector<MPoly>{w, yp, zp};
    }
    case Family::ShiftLike: {
      std::vector<MPoly> c;
      c.push_back((MPoly::variable(n_, n_ - 1) - poly1_mpoly(shift_p_, MPoly::variable(n_, n_ - 2))) *
                  (one / a_));
      for (int i = 1; i < n_; ++i) c.push_back(MPoly::variable(n_, i - 1));
      return c;
    }
  }
  return std::nullopt;
}

void MapSpec::finalize_degrees_and_indeterminacy() {
  auto leads_of = [](const std::vector<MPoly>& comps, int deg) {
    std::vector<MPoly> leads;
    leads.reserve(comps.size());
    for (const auto& c : comps) leads.push_back(c.homogeneous_part(deg));
    return leads;
  };

  if (family_ == Family::HenonComposition) {
    // Degrees multiply along the composition; expansion is not needed.
    long long d = 1;
    for (const auto& s : stages_) d *= s.p.degree();
    d_ = static_cast<int>(d);
    dinv_ = d_;
    // Leading homogeneous data tracked through the stages: the top-degree
    // component is the second one, a pure power of y (forward) resp. x
    // (inverse); lower-degree components vanish at T=0.
    MPoly lead_f = MPoly::variable(2, 1);  // y
    for (const auto& s : stages_) lead_f = lead_f.pow(s.p.degree()) * s.p.leading();
    MPoly lead_b = MPoly::variable(2, 0);  // x
    for (auto it = stages_.rbegin(); it != stages_.rend(); ++it)
      lead_b = lead_b.pow(it->p.degree()) * (it->p.leading() / it->a);
    iplus_ = indeterminacy_from_leads({MPoly(2), lead_f}, 2);
    iminus_ = indeterminacy_from_leads({lead_b, MPoly(2)}, 2);
  } else {
    auto fwd = forward_components();
    auto inv = inverse_components();
    d_ = 0;
    for (const auto& c : *fwd) d_ = std::max(d_, c.total_degree());
    dinv_ = 0;
    for (const auto& c : *inv) dinv_ = std::max(dinv_, c.total_degree());
    iplus_ = indeterminacy_from_leads(leads_of(*fwd, d_), n_);
    iminus_ = indeterminacy_from_leads(leads_of(*inv, dinv_), n_);
  }

  // Regularity index: smallest l in [1, n-1] with d^l == (d^-)^(n-l).
  auto ipow = [](long long b, int e) {
    long long r = 1;
    for (int i = 0; i < e; ++i) {
      r *= b;
      if (r > (1ll << 62)) return (long long)-1;
    }
    return r;
  };
  l_.reset();
  for (int l = 1; l < n_; ++l) {
    if (ipow(d_, l) == ipow(dinv_, n_ - l)) {
      l_ = l;
      break;
    }
  }
  if (!l_)
    warnings_.push_back("no integer regularity index solves deg(f)^l = deg(f^-1)^(n-l)");
  if (!iplus_.known || !iminus_.known)
    warnings_.push_back("indeterminacy analysis did not reduce to coordinate conditions");
  else if (!descriptors_disjoint(iplus_, iminus_, n_))
    warnings_.push_back("indeterminacy sets intersect at infinity; map is not regular");
}

bool MapSpec::regular() const {
  return l_.has_value() && iplus_.known && iminus_.known &&
         descriptors_disjoint(iplus_, iminus_, n_);
}

double MapSpec::coefficient_scale() const {
  auto poly_sum = [](const Poly1& p) {
    double s = 0.0;
    for (const Cplx& c : p.coeffs()) s += std::abs(c);
    return s;
  };
  double scale = 0.0;
  switch (family_) {
    case Family::HenonComposition:
      for (const HenonStage& st : stages_)
        scale = std::max(scale, poly_sum(st.p) + std::abs(st.a));
      break;
    case Family::FornaessWuH1:
    case Family::FornaessWuH2: {
      double psum = 0.0;
      for (const auto& row : ptable_)
        for (const Cplx& c : row) psum += std::abs(c);
      scale = psum + poly_sum(q_) + std::abs(a_) + std::abs(b_);
      break;
    }
    case Family::ShiftLike:
      scale = poly_sum(shift_p_) + std::abs(a_);
      break;
  }
  return 1.0 + scale;
}

std::string MapSpec::describe() const {
  std::ostringstream os;
  os << "family: " << family_name(family_) << "\n";
  os << "n: " << n_ << "\n";
  os << "degree d: " << d_ << "\n";
  os << "inverse degree d-: " << dinv_ << "\n";
  if (l_)
    os << "regularity index l: " << *l_ << "\n";
  else
    os << "regularity index l: none\n";
  os << "det Df (constant): " << delta_.real() << (delta_.imag() < 0 ? " - " : " + ")
     << std::fabs(delta_.imag()) << "i  |det| = " << std::abs(delta_) << "\n";
  os << "I+ : " << iplus_.to_string(n_) << "\n";
  os << "I- : " << iminus_.to_string(n_) << "\n";
  os << "I+ and I- disjoint: "
     << (iplus_.known && iminus_.known
             ? (descriptors_disjoint(iplus_, iminus_, n_) ? "yes" : "no")
             : "unknown")
     << "\n";
  os << "regular: " << (regular() ? "yes" : "no") << "\n";
  for (const auto& w : warnings_) os << "warning: " << w << "\n";
  return os.str();
}

// ---------------------------------------------------------------------------
// evaluation

CPoint MapSpec::eval_forward(const CPoint& p) const {
  if (p.escaped) return p;
  CPoint q = p;
  switch (family_) {
    case Family::HenonComposition:
      for (const auto& s : stages_) {
        Cplx x = q.z[0], y = q.z[1];
        q.z[0] = y;
        q.z[1] = s.p.eval(y) - s.a * x;
        if (check_escape(q).escaped) return q;
      }
      return q;
    case Family::FornaessWuH1: {
      Cplx x = q.z[0], y = q.z[1], z = q.z[2];
      q.z[0] = ptable_eval(ptable_, x, y) + a_ * z;
      q.z[1] = q_.eval(y) + x;
      q.z[2] = y;
      return check_escape(q);
    }
    case Family::FornaessWuH2: {
      Cplx x = q.z[0], y = q.z[1], z = q.z[2];
      q.z[0] = ptable_eval(ptable_, x, y) + a_ * z;
      q.z[1] = q_.eval(x) + b_ * y;
      q.z[2] = x;
      return check_escape(q);
    }
    case Family::ShiftLike: {
      Cplx z0 = q.z[0];
      Cplx zn = q.z[n_ - 1];
      for (int i = 0; i + 1 < n_; ++i) q.z[i] = q.z[i + 1];
      q.z[n_ - 1] = shift_p_.eval(zn) + a_ * z0;
      return check_escape(q);
    }
  }
  return q;
}

CPoint MapSpec::eval_inverse(const CPoint& p) const {
  if (p.escaped) return p;
  CPoint q = p;
  switch (family_) {
    case Family::HenonComposition:
      for (auto it = stages_.rbegin(); it != stages_.rend(); ++it) {
        Cplx x = q.z[0], y = q.z[1];
        q.z[0] = (it->p.eval(x) - y) / it->a;
        q.z[1] = x;
        if (check_escape(q).escaped) return q;
      }
      return q;
    case Family::FornaessWuH1: {
      Cplx u = q.z[0], v = q.z[1], w = q.z[2];
      Cplx xp = v - q_.eval(w);
      q.z[0] = xp;
      q.z[1] = w;
      q.z[2] = (u - ptable_eval(ptable_, xp, w)) / a_;
      return check_escape(q);
    }
    case Family::FornaessWuH2: {
      Cplx u = q.z[0], v = q.z[1], w = q.z[2];
      Cplx yp = (v - q_.eval(w)) / b_;
      q.z[0] = w;
      q.z[1] = yp;
      q.z[2] = (u - ptable_eval(ptable_, w, yp)) / a_;
      return check_escape(q);
    }
    case Family::ShiftLike: {
      Cplx first = (q.z[n_ - 1] - shift_p_.eval(q.z[n_ - 2])) / a_;
      for (int i = n_ - 1; i >= 1; --i) q.z[i] = q.z[i - 1];
      q.z[0] = first;
      return check_escape(q);
    }
  }
  return q;
}

CMatrix MapSpec::jacobian(const CPoint& p) const {
  if (p.escaped) throw std::domain_error("jacobian of an escaped point");
  switch (family_) {
    case Family::HenonComposition: {
      CMatrix J = CMatrix::Identity(2, 2);
      CPoint q = p;
      for (const auto& s : stages_) {
        CMatrix Js(2, 2);
        Js(0, 0) = Cplx(0, 0);
        Js(0, 1) = Cplx(1, 0);
        Js(1, 0) = -s.a;
        Js(1, 1) = s.p.eval_deriv(q.z[1]);
        J = Js * J;
        Cplx x = q.z[0], y = q.z[1];
        q.z[0] = y;
        q.z[1] = s.p.eval(y) - s.a * x;
      }
      return J;
    }
    case Family::FornaessWuH1: {
      CMatrix J(3, 3);
      Cplx x = p.z[0], y = p.z[1];
      J << ptable_dx(ptable_, x, y), ptable_dy(ptable_, x, y), a_,
           Cplx(1, 0), q_.eval_deriv(y), Cplx(0, 0),
           Cplx(0, 0), Cplx(1, 0), Cplx(0, 0);
      return J;
    }
    case Family::FornaessWuH2: {
      CMatrix J(3, 3);
      Cplx x = p.z[0], y = p.z[1];
      J << ptable_dx(ptable_, x, y), ptable_dy(ptable_, x, y), a_,
           q_.eval_deriv(x), b_, Cplx(0, 0),
           Cplx(1, 0), Cplx(0, 0), Cplx(0, 0);
      return J;
    }
    case Family::ShiftLike: {
      CMatrix J = CMatrix::Zero(n_, n_);
      for (int i = 0; i + 1 < n_; ++i) J(i, i + 1) = Cplx(1, 0);
      J(n_ - 1, 0) = a_;
      J(n_ - 1, n_ - 1) = shift_p_.eval_deriv(p.z[n_ - 1]);
      return J;
    }
  }
  return CMatrix();
}

CMatrix MapSpec::inverse_jacobian(const CPoint& p) const {
  if (p.escaped) throw std::domain_error("inverse jacobian of an escaped point");
  switch (family_) {
    case Family::HenonComposition: {
      CMatrix J = CMatrix::Identity(2, 2);
      CPoint q = p;
      for (auto it = stages_.rbegin(); it != stages_.rend(); ++it) {
        CMatrix Js(2, 2);
        Js(0, 0) = it->p.eval_deriv(q.z[0]) / it->a;
        Js(0, 1) = Cplx(-1, 0) / it->a;
        Js(1, 0) = Cplx(1, 0);
        Js(1, 1) = Cplx(0, 0);
        J = Js * J;
        Cplx x = q.z[0], y = q.z[1];
        q.z[0] = (it->p.eval(x) - y) / it->a;
        q.z[1] = x;
      }
      return J;
    }
    case Family::FornaessWuH1: {
      Cplx u = p.z[0], v = p.z[1], w = p.z[2];
      (void)u;
      Cplx xp = v - q_.eval(w);
      Cplx px = ptable_dx(ptable_, xp, w), py = ptable_dy(ptable_, xp, w);
      Cplx qd = q_.eval_deriv(w);
      CMatrix J(3, 3);
      J << Cplx(0, 0), Cplx(1, 0), -qd,
           Cplx(0, 0), Cplx(0, 0), Cplx(1, 0),
           Cplx(1, 0) / a_, -px / a_, (px * qd - py) / a_;
      return J;
    }
    case Family::FornaessWuH2: {
      Cplx u = p.z[0], v = p.z[1], w = p.z[2];
      (void)u;
      Cplx yp = (v - q_.eval(w)) / b_;
      Cplx px = ptable_dx(ptable_, w, yp), py = ptable_dy(ptable_, w, yp);
      Cplx qd = q_.eval_deriv(w);
      CMatrix J(3, 3);
      J << Cplx(0, 0), Cplx(0, 0), Cplx(1, 0),
           Cplx(0, 0), Cplx(1, 0) / b_, -qd / b_,
           Cplx(1, 0) / a_, -py / (a_ * b_), -(px - py * qd / b_) / a_;
      return J;
    }
    case Family::ShiftLike: {
      CMatrix J = CMatrix::Zero(n_, n_);
      J(0, n_ - 2) = -shift_p_.eval_deriv(p.z[n_ - 2]) / a_;
      J(0, n_ - 1) = Cplx(1, 0) / a_;
      for (int i = 1; i < n_; ++i) J(i, i - 1) = Cplx(1, 0);
      return J;
    }
  }
  return CMatrix();
}

CPoint MapSpec::iterate(const CPoint& p, int k) const {
  CPoint q = p;
  if (k >= 0)
    for (int i = 0; i < k && !q.escaped; ++i) q = eval_forward(q);
  else
    for (int i = 0; i < -k && !q.escaped; ++i) q = eval_inverse(q);
  return q;
}

}  // namespace regal
