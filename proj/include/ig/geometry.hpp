#pragma once

#include "ig/core.hpp"

namespace ig {

// Non-horizontal affine line in John coordinates. The line is
//   t -> (y1 + a1*t, y2 + a2*t, t),
// so alpha = (a1, a2, 1) is the (non-unit) positive direction.
struct LineNH {
  double y1 = 0.0, y2 = 0.0, a1 = 0.0, a2 = 0.0;

  Vec3 point(double t) const { return {y1 + a1 * t, y2 + a2 * t, t}; }
  Vec3 base() const { return {y1, y2, 0.0}; }
  Vec3 direction() const { return {a1, a2, 1.0}; }
  double k() const { return std::sqrt(1.0 + a1 * a1 + a2 * a2); }
  double k1() const { return std::sqrt(1.0 + a1 * a1); }
  double k2() const { return std::sqrt(1.0 + a2 * a2); }
  Vec3 unit_direction() const { return direction() * (1.0 / k()); }
};

struct KFactors {
  double k, k1, k2;
};

inline KFactors k_factors(const LineNH& m) { return {m.k(), m.k1(), m.k2()}; }

// John chart: the line through x with direction xi, xi.z != 0.
LineNH chart_from_point_direction(const Vec3& x, const Vec3& xi);

// If the line meets the open ball |p| < radius, returns true and the clipped
// parameter interval [t0, t1] of LineNH::point.
bool clip_line_to_ball(const LineNH& m, double radius, double& t0, double& t1);

enum class HalfPlane { H1, H2 };

// Oriented half-plane with boundary m. H1 is parallel to the x1-axis, H2 to
// the x2-axis; the normal is chosen so that (e_m, nu_m, nu_H) is positively
// oriented, with nu_m the interior unit normal inside the half-plane.
// The orthonormal parametrization is point(s,t) = base + t*e_m + s*nu_m with
// s >= 0, so the area element is ds dt.
class HalfPlaneFrame {
public:
  HalfPlaneFrame(const LineNH& m, HalfPlane selector);

  const LineNH& line() const { return line_; }
  HalfPlane selector() const { return selector_; }
  const Vec3& normal() const { return normal_; }
  const Vec3& along() const { return along_; }      // e_m
  const Vec3& interior() const { return interior_; }  // nu_m

  Vec3 point(double s, double t) const {
    return line_.base() + t * along_ + s * interior_;
  }

private:
  LineNH line_;
  HalfPlane selector_;
  Vec3 normal_, along_, interior_;
};

// Affine plane {<x,nu> = d} with an orthonormal in-plane basis;
// point(a,b) = d*nu + a*b1 + b*b2.
class PlaneFrame {
public:
  PlaneFrame(const Vec3& normal, double offset);

  const Vec3& normal() const { return normal_; }
  double offset() const { return offset_; }
  const Vec3& basis1() const { return b1_; }
  const Vec3& basis2() const { return b2_; }

  Vec3 point(double a, double b) const {
    return offset_ * normal_ + a * b1_ + b * b2_;
  }

private:
  Vec3 normal_;
  double offset_;
  Vec3 b1_, b2_;
};

}  // namespace ig
