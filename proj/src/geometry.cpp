#include "ig/geometry.hpp"

#include <cmath>

namespace ig {

LineNH chart_from_point_direction(const Vec3& x, const Vec3& xi) {
  if (xi.z == 0.0)
    throw std::invalid_argument(
        "chart_from_point_direction: horizontal direction is outside the chart");
  double a1 = xi.x / xi.z;
  double a2 = xi.y / xi.z;
  return {x.x - a1 * x.z, x.y - a2 * x.z, a1, a2};
}

bool clip_line_to_ball(const LineNH& m, double radius, double& t0, double& t1) {
  // |b + t d|^2 = radius^2 with b = (y1,y2,0), d = (a1,a2,1).
  Vec3 b = m.base(), d = m.direction();
  double A = norm2(d);
  double B = 2.0 * dot(b, d);
  double C = norm2(b) - radius * radius;
  double disc = B * B - 4.0 * A * C;
  if (disc <= 0.0) return false;
  double sq = std::sqrt(disc);
  t0 = (-B - sq) / (2.0 * A);
  t1 = (-B + sq) / (2.0 * A);
  return true;
}

HalfPlaneFrame::HalfPlaneFrame(const LineNH& m, HalfPlane selector)
    : line_(m), selector_(selector) {
  double k = m.k();
  along_ = m.direction() * (1.0 / k);
  if (selector == HalfPlane::H1) {
    double k2 = m.k2();
    normal_ = {0.0, 1.0 / k2, -m.a2 / k2};
  } else {
    double k1 = m.k1();
    normal_ = {-1.0 / k1, 0.0, m.a1 / k1};
  }
  // (e_m, nu_m, nu_H) positively oriented forces nu_m = nu_H x e_m.
  interior_ = cross(normal_, along_);

  double d = det3(along_, interior_, normal_);
  if (std::abs(d - 1.0) > 1e-12)
    throw std::logic_error("HalfPlaneFrame: orientation determinant != +1");
  // nu_m must point into {x_i > y_i + a_i x3} for the selector's axis i.
  Vec3 q = point(1.0, 0.0);
  double inside = (selector == HalfPlane::H1) ? q.x - (m.y1 + m.a1 * q.z)
                                              : q.y - (m.y2 + m.a2 * q.z);
  if (inside <= 0.0)
    throw std::logic_error("HalfPlaneFrame: interior normal points outward");
}

PlaneFrame::PlaneFrame(const Vec3& normal, double offset)
    : normal_(normalized(normal)), offset_(offset) {
  Vec3 seed = std::abs(normal_.x) < 0.9 ? Vec3{1, 0, 0} : Vec3{0, 1, 0};
  b1_ = normalized(seed - dot(seed, normal_) * normal_);
  b2_ = cross(normal_, b1_);
}

}  // namespace ig
