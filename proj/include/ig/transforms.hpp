#pragma once

#include <cstdint>
#include <memory>
#include <string>

#include "ig/fields.hpp"
#include "ig/geometry.hpp"
#include "ig/quadrature.hpp"

namespace ig {

// Line integral of an arbitrary parameter-space integrand, truncated to the
// segment where the line meets the ball |x| <= support. Returns 0 when the
// line misses the ball. Panels are counted along arc length.
double integrate_line(const std::function<double(double)>& eval,
                      const LineNH& line, double support,
                      const QuadratureSpec& spec);

// Integral over the half-plane in its orthonormal (s,t) coordinates,
// truncated to the support ball.
double integrate_halfplane(const std::function<double(double, double)>& eval,
                           const HalfPlaneFrame& frame, double support,
                           const QuadratureSpec& spec);

// Integral over the full plane in its orthonormal (a,b) coordinates.
double integrate_plane(const std::function<double(double, double)>& eval,
                       const PlaneFrame& frame, double support,
                       const QuadratureSpec& spec);

// X-ray transform in the John parametrization:
//   sum f_{i1..ih}(y1 + a1 t, y2 + a2 t, t) alpha_{i1} ... alpha_{ih} dt,
// alpha = (a1, a2, 1). Note dt is the affine parameter, not arc length; the
// unit-speed line integral is k^{1-h} times this value.
double xray(const SmoothField& f, const LineNH& line, const QuadratureSpec& spec);

// The general form on points/directions (any xi != 0), used for the
// homogeneity and parity checks.
double xray_general(const SmoothField& f, const Vec3& x, const Vec3& xi,
                    const QuadratureSpec& spec);

// phi of the John range condition; with the parametrization above this is
// exactly xray, and we keep the name for the function on R^4.
double phi_chart(const SmoothField& f, double y1, double y2, double a1,
                 double a2, const QuadratureSpec& spec);

// Radon plane transform of a symmetric rank-2 field:
//   int_L tr(Q|_L) dsigma = int_L (tr Q - Q(nu,nu)) dsigma.
double radon_plane(const SmoothField& q, const PlaneFrame& frame,
                   const QuadratureSpec& spec);

// The half-plane function of a velocity field, by the explicit coordinate
// formulas. Variant H2:
//   w = int int_{x2 > l2} (1/k) (a1 v1 + a2 v2 + v3)(v1 - a1 v3)|_(l1,x2,x3) dx2 dx3,
// variant H1:
//   w = -int int_{x1 > l1} (1/k) (a1 v1 + a2 v2 + v3)(v2 - a2 v3)|_(x1,l2,x3) dx1 dx3,
// with l_i = y_i + a_i x3. Both equal w(m) when v solves the momentum system.
double build_w(const SmoothField& v, const LineNH& line, HalfPlane variant,
               const QuadratureSpec& spec);

// L1 mass of the build_w integrand, used as the residual scale when the
// value itself vanishes.
double build_w_mass(const SmoothField& v, const LineNH& line, HalfPlane variant,
                    const QuadratureSpec& spec);

// L1 mass of the IQ0 integrand: k * int (|p| + |v|^2 + 2<v,e>^2) dt.
double iq_zero_mass(const SmoothField& v, const SmoothField& p,
                    const LineNH& line, const QuadratureSpec& spec);

// L1 mass of the JQ0 integrand: 2 * int (|p| + <v,nu>^2) dsigma.
double radon_q0_mass(const SmoothField& v, const SmoothField& p,
                     const PlaneFrame& frame, const QuadratureSpec& spec);

// F(x1,x2) = int (-v2 v3, v1 v3) dx3 along the vertical chord.
Vec2 build_F(const SmoothField& v, double x1, double x2,
             const QuadratureSpec& spec);

// w0(P0) = int_ray <e_r, F> ds from P0 in the given unit direction;
// independent of the direction for solution fields.
double w0_ray(const SmoothField& v, const Vec2& p0, const Vec2& ray_direction,
              const QuadratureSpec& spec);

// Unit-speed line integral int_m (p + |v|^2 - 2 <v,e_m>^2) ds = (IQ0)(m);
// equals (1/k) * xray(q_zero(v,p), m).
double iq_zero_lineintegral(const SmoothField& v, const SmoothField& p,
                            const LineNH& line, const QuadratureSpec& spec);

// A function on the line manifold: w, IQ0, X-ray images, or any derived
// object. Evaluation is deterministic for a fixed QuadratureSpec. Optional
// memoization on a 1e-9 quantized coordinate grid for FD stencils that
// revisit nodes; safe under concurrent use.
class GrassmannFunction {
public:
  GrassmannFunction() = default;
  GrassmannFunction(std::function<double(const LineNH&)> eval,
                    std::string provenance, bool memoize = false);

  double operator()(const LineNH& m) const;
  const std::string& provenance() const { return provenance_; }

private:
  struct Cache;
  std::function<double(const LineNH&)> eval_;
  std::string provenance_;
  std::shared_ptr<Cache> cache_;
};

GrassmannFunction make_xray_function(const SmoothField& f,
                                     const QuadratureSpec& spec,
                                     bool memoize = true);

// Unit-speed X-ray image k^{1-h} * xray, the invariant function on lines the
// operators P and Delta_M act on.
GrassmannFunction make_unit_xray_function(const SmoothField& f,
                                          const QuadratureSpec& spec,
                                          bool memoize = true);

GrassmannFunction make_w_function(const SmoothField& v,
                                  const QuadratureSpec& spec,
                                  HalfPlane variant = HalfPlane::H2,
                                  bool memoize = true);

GrassmannFunction make_iq0_function(const SmoothField& v, const SmoothField& p,
                                    const QuadratureSpec& spec,
                                    bool memoize = true);

}  // namespace ig
