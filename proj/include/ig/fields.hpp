#pragma once

#include <array>
#include <functional>

#include "ig/core.hpp"
#include "ig/quadrature.hpp"

namespace ig {

// Radial profile psi(s) in the squared radius s = |x|^2, compactly supported:
// psi and its derivatives vanish for s >= s_max.
struct RadialProfile {
  std::function<double(double)> value;
  std::function<double(double)> deriv;
  std::function<double(double)> second;  // may be null
  double s_max = 0.0;
};

// psi(s) = A * exp(-1/(R^2 - s)) for s < R^2, else 0.
RadialProfile make_bump_profile(double radius, double amplitude);

// psi(s) = A * (R^2 - s)^4 for s < R^2, else 0. C^3 at the support edge,
// which is plenty for every quadrature and stencil in use; a second family
// to guard against bump-specific coincidences.
RadialProfile make_poly_profile(double radius, double amplitude);

inline constexpr int sym_index(int i, int j) {
  // storage order 11,22,33,12,13,23
  if (i == j) return i;
  int a = i < j ? i : j, b = i < j ? j : i;
  return a == 0 ? (b == 1 ? 3 : 4) : 5;
}

// Compactly supported smooth scalar / vector / symmetric rank-2 tensor field
// on R^3: a component evaluator plus metadata. When no analytic derivative
// evaluator is supplied, first derivatives fall back to 4th-order central
// differences with step 1e-4 * support radius.
class SmoothField {
public:
  using Evaluator = std::function<void(const Vec3&, double*)>;
  // layout: out[c*3 + k] = d f_c / d x_k
  using DerivEvaluator = std::function<void(const Vec3&, double*)>;

  static constexpr int ncomp(int rank) { return rank == 0 ? 1 : (rank == 1 ? 3 : 6); }
  static constexpr int kMaxComp = 6;

  SmoothField(int rank, double support_radius, Evaluator eval,
              DerivEvaluator deriv = nullptr);

  int rank() const { return rank_; }
  int ncomp() const { return ncomp(rank_); }
  double support_radius() const { return support_; }
  bool has_analytic_derivatives() const { return static_cast<bool>(deriv_); }

  void values(const Vec3& x, double* out) const { eval_(x, out); }
  void derivatives(const Vec3& x, double* out) const;

  double scalar(const Vec3& x) const;
  Vec3 vector(const Vec3& x) const;
  double component(const Vec3& x, int i, int j) const;  // rank 2
  double trace(const Vec3& x) const;                    // rank 2

  // f contracted `rank` times with a.
  double contract(const Vec3& x, const Vec3& a) const;

  double fd_step() const { return 1e-4 * support_; }

private:
  int rank_;
  double support_;
  Evaluator eval_;
  DerivEvaluator deriv_;
};

SmoothField zero_field(int rank);

// f(x) = psi(|x|^2), with analytic gradient.
SmoothField radial_scalar(const RadialProfile& psi);

// v(x) = psi(|x|^2) * x, an exact solution of the momentum system for the
// pressure of radial_pressure. Analytic Jacobian.
SmoothField radial_velocity(const RadialProfile& psi);

// The unique compactly supported pressure closing the momentum balance for
// radial_velocity(psi):
//   p(x) = G(|x|^2),  G(s) = 2 * int_s^{s_max} (psi(t) psi'(t) t + psi(t)^2) dt.
// G is precomputed on a Chebyshev table and interpolated; construction throws
// NumericalError if the table fails its doubled-order self check.
SmoothField radial_pressure(const RadialProfile& psi,
                            const QuadratureSpec& spec = {});

// Q0_ij = (p + |v|^2) delta_ij - 2 v_i v_j.
SmoothField q_zero(const SmoothField& v, const SmoothField& p);

// v_i v_j as a symmetric rank-2 field.
SmoothField outer_square(const SmoothField& v);

// Symmetric inner differentiation: rank 0 -> gradient, rank 1 -> symmetrized
// Jacobian (1/2)(d_i u_j + d_j u_i).
SmoothField symmetric_gradient(const SmoothField& u);

// 2 Psi^ij = eps_ilm d_m(v^j v^l) + eps_jlm d_m(v^i v^l); the symmetrization
// of curl(v x v) rows.
SmoothField psi_tensor(const SmoothField& v);

SmoothField translate(const SmoothField& f, const Vec3& c);
SmoothField rotate(const SmoothField& f, const Mat3& rot);

// Modulated test fields: component c is psi(|x|^2) * (b_c + <g_c, x>) with
// analytic derivatives. `coeffs` supplies ncomp(rank) pairs.
struct LinearCoeff {
  double b = 0.0;
  Vec3 g{};
};
SmoothField modulated_field(int rank, const RadialProfile& psi,
                            const std::vector<LinearCoeff>& coeffs);

// Componentwise Laplacian of modulated_field (same coefficients); requires
// psi.second. Used by the commutation checks.
SmoothField modulated_laplacian(int rank, const RadialProfile& psi,
                                const std::vector<LinearCoeff>& coeffs);

}  // namespace ig
