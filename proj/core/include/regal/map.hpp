#pragma once
// Map families: compositions of generalized Hénon stages in C^2, the two
// quadratic three-dimensional forms, and shift-like maps in C^n.
//
// A MapSpec is immutable after construction. Builders derive, by exact
// symbolic degree algebra on exponent vectors (never by sampling):
//   * forward degree d and inverse degree d^-
//   * the regularity index l solving d^l = (d^-)^(n-l), if an integer solution
//     exists
//   * descriptors for the indeterminacy sets I^+(f), I^-(f) = I^+(f^{-1}) at
//     the hyperplane at infinity, as coordinate vanishing conditions
//   * the constant Jacobian determinant δ

#include <Eigen/Dense>
#include <optional>
#include <string>
#include <vector>

#include "regal/mpoly.hpp"
#include "regal/poly1.hpp"
#include "regal/types.hpp"

namespace regal {

using CMatrix = Eigen::Matrix<Cplx, Eigen::Dynamic, Eigen::Dynamic>;

enum class Family { HenonComposition, FornaessWuH1, FornaessWuH2, ShiftLike };

std::string family_name(Family f);

// One Hénon stage h(x, y) = (y, p(y) - a*x); det Dh = +a.
struct HenonStage {
  Poly1 p;
  Cplx a;
};

// Indeterminacy set descriptor: the subset of the hyperplane T = 0 where the
// listed affine coordinates vanish, i.e. {[z_0 : ... : z_{n-1} : 0] :
// z_i = 0 for i in vanishing}. `known` is false when the leading-part
// analysis does not reduce to coordinate conditions.
struct IndetDescriptor {
  bool known = false;
  std::vector<int> vanishing;  // sorted coordinate indices
  int dim = -1;                // projective dimension inside {T=0}

  std::string to_string(int n) const;
};

// True when the two descriptors have empty intersection inside {T=0}: the
// combined vanishing conditions kill every homogeneous coordinate.
bool descriptors_disjoint(const IndetDescriptor& a, const IndetDescriptor& b, int n);

class MapSpec {
 public:
  // --- builders -----------------------------------------------------------
  // Composition of Hénon stages, applied first-to-last: f = h_m ∘ ... ∘ h_1.
  // Requires every deg p_i >= 2 and a_i != 0.
  static MapSpec build_henon_composition(std::vector<HenonStage> stages);

  // Three-dimensional quadratic forms. P is a 3x3 coefficient table,
  // P(x,y) = sum c[i][j] x^i y^j with 0 <= i, j <= 2 (degree at most two in
  // each variable); Q must have degree exactly 2.
  //   form 1: (x,y,z) -> (P(x,y) + a z, Q(y) + x, y),   requires a != 0
  //   form 2: (x,y,z) -> (P(x,y) + a z, Q(x) + b y, x), requires a != 0, b != 0
  static MapSpec build_fornaess_wu(int form, const std::vector<std::vector<Cplx>>& P,
                                   const Poly1& Q, Cplx a, Cplx b = Cplx(0.0, 0.0));

  // Shift-like: (z_1, ..., z_n) -> (z_2, ..., z_n, p(z_n) + a z_1), a != 0,
  // deg p >= 2, n >= 2.
  static MapSpec build_shift_like(int n, const Poly1& p, Cplx a);

  // --- bookkeeping --------------------------------------------------------
  Family family() const { return family_; }
  int n() const { return n_; }
  int degree() const { return d_; }
  int inverse_degree() const { return dinv_; }
  // Integer l in [1, n-1] with d^l == (d^-)^(n-l); nullopt with a regularity
  // warning recorded when no integer solution exists.
  std::optional<int> regularity_index() const { return l_; }
  bool regular() const;
  Cplx det_df() const { return delta_; }  // constant Jacobian determinant
  const IndetDescriptor& indeterminacy_plus() const { return iplus_; }
  const IndetDescriptor& indeterminacy_minus() const { return iminus_; }
  const std::vector<std::string>& warnings() const { return warnings_; }
  std::string describe() const;

  // Coefficient-based length scale of the nonlinearity: 1 plus the largest
  // per-component sum of |coefficients| (including |a|, |b|). Dynamics at
  // radii beyond this scale are dominated by the leading monomials; samplers
  // use it as a floor so small trial radii still probe the active region.
  double coefficient_scale() const;

  // Family data accessors (used by the config round-trip and tests).
  const std::vector<HenonStage>& stages() const { return stages_; }
  const std::vector<std::vector<Cplx>>& p_table() const { return ptable_; }
  const Poly1& q_poly() const { return q_; }
  const Poly1& shift_poly() const { return shift_p_; }
  Cplx param_a() const { return a_; }
  Cplx param_b() const { return b_; }

  // Exact symbolic expansions of the forward/inverse components (affine
  // coordinates). Hénon compositions are expanded only when the total degree
  // stays small; otherwise nullopt (degrees are still tracked exactly).
  std::optional<std::vector<MPoly>> forward_components() const;
  std::optional<std::vector<MPoly>> inverse_components() const;

  // --- evaluation (pure) --------------------------------------------------
  CPoint eval_forward(const CPoint& p) const;
  CPoint eval_inverse(const CPoint& p) const;
  CMatrix jacobian(const CPoint& p) const;          // D f at p
  CMatrix inverse_jacobian(const CPoint& p) const;  // D f^{-1} at p

  CPoint iterate(const CPoint& p, int k) const;  // k >= 0 forward, k < 0 backward

 private:
  MapSpec() = default;
  void finalize_degrees_and_indeterminacy();

  Family family_ = Family::HenonComposition;
  int n_ = 2;
  std::vector<HenonStage> stages_;           // HenonComposition
  std::vector<std::vector<Cplx>> ptable_;    // FornaessWu
  Poly1 q_ = Poly1({Cplx(0, 0), Cplx(1, 0)});
  Poly1 shift_p_ = Poly1({Cplx(0, 0), Cplx(1, 0)});
  Cplx a_{0.0, 0.0}, b_{0.0, 0.0};

  int d_ = 0, dinv_ = 0;
  std::optional<int> l_;
  Cplx delta_{0.0, 0.0};
  IndetDescriptor iplus_, iminus_;
  std::vector<std::string> warnings_;
};

// Derives a vanishing-coordinate descriptor from the degree-d homogeneous
// leading parts of the map components (T = 0 slice). Exposed for tests.
IndetDescriptor indeterminacy_from_leads(const std::vector<MPoly>& leads, int n);

}  // namespace regal
