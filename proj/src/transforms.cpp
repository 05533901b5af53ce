#include "ig/transforms.hpp"

#include <cmath>
#include <mutex>
#include <unordered_map>

namespace ig {

namespace {

double composite(const std::function<double(double)>& f, double a, double b,
                 int panels, int order) {
  if (!(b > a)) return 0.0;
  const GaussRule& rule = gauss_rule(order);
  double h = (b - a) / panels;
  double total = 0.0;
  for (int p = 0; p < panels; ++p) {
    double c = a + (p + 0.5) * h;
    double r = 0.5 * h;
    double s = 0.0;
    for (size_t q = 0; q < rule.nodes.size(); ++q)
      s += rule.weights[q] * f(c + r * rule.nodes[q]);
    total += r * s;
  }
  return total;
}

int panel_count(double length, const QuadratureSpec& spec) {
  return std::max(1, (int)std::ceil(spec.points_per_unit * length));
}

}  // namespace

double integrate_line(const std::function<double(double)>& eval,
                      const LineNH& line, double support,
                      const QuadratureSpec& spec) {
  double t0, t1;
  if (!clip_line_to_ball(line, support, t0, t1)) return 0.0;
  double k = line.k();
  return composite(eval, t0, t1, panel_count(k * (t1 - t0), spec), spec.order);
}

double integrate_halfplane(const std::function<double(double, double)>& eval,
                           const HalfPlaneFrame& frame, double support,
                           const QuadratureSpec& spec) {
  Vec3 b = frame.line().base();
  double bt = dot(b, frame.along());
  double bs = dot(b, frame.interior());
  double rho2 = support * support - norm2(b) + bt * bt + bs * bs;
  if (rho2 <= 0.0) return 0.0;
  double rho = std::sqrt(rho2);
  double pad = 1.0 / spec.points_per_unit;
  double s_hi = -bs + rho + pad;
  if (s_hi <= 0.0) return 0.0;
  double s_lo = std::max(0.0, -bs - rho - pad);
  double t_lo = -bt - rho - pad, t_hi = -bt + rho + pad;
  int sp = panel_count(s_hi - s_lo, spec);
  int tp = panel_count(t_hi - t_lo, spec);
  return composite(
      [&](double s) {
        return composite([&](double t) { return eval(s, t); }, t_lo, t_hi, tp,
                         spec.order);
      },
      s_lo, s_hi, sp, spec.order);
}

double integrate_plane(const std::function<double(double, double)>& eval,
                       const PlaneFrame& frame, double support,
                       const QuadratureSpec& spec) {
  double rho2 = support * support - frame.offset() * frame.offset();
  if (rho2 <= 0.0) return 0.0;
  double rho = std::sqrt(rho2) + 1.0 / spec.points_per_unit;
  int p = panel_count(2.0 * rho, spec);
  return composite(
      [&](double a) {
        return composite([&](double b) { return eval(a, b); }, -rho, rho, p,
                         spec.order);
      },
      -rho, rho, p, spec.order);
}

double xray(const SmoothField& f, const LineNH& line, const QuadratureSpec& spec) {
  Vec3 alpha = line.direction();
  return integrate_line(
      [&](double t) { return f.contract(line.point(t), alpha); }, line,
      f.support_radius(), spec);
}

double xray_general(const SmoothField& f, const Vec3& x, const Vec3& xi,
                    const QuadratureSpec& spec) {
  double speed = norm(xi);
  if (speed == 0.0) throw std::invalid_argument("xray_general: zero direction");
  double R = f.support_radius();
  double A = norm2(xi), B = 2.0 * dot(x, xi), C = norm2(x) - R * R;
  double disc = B * B - 4.0 * A * C;
  if (disc <= 0.0) return 0.0;
  double sq = std::sqrt(disc);
  double t0 = (-B - sq) / (2.0 * A), t1 = (-B + sq) / (2.0 * A);
  return composite([&](double t) { return f.contract(x + t * xi, xi); }, t0, t1,
                   panel_count(speed * (t1 - t0), spec), spec.order);
}

double phi_chart(const SmoothField& f, double y1, double y2, double a1,
                 double a2, const QuadratureSpec& spec) {
  return xray(f, {y1, y2, a1, a2}, spec);
}

double radon_plane(const SmoothField& q, const PlaneFrame& frame,
                   const QuadratureSpec& spec) {
  if (q.rank() != 2)
    throw std::invalid_argument("radon_plane: expects a rank-2 field");
  const Vec3& nu = frame.normal();
  return integrate_plane(
      [&](double a, double b) {
        Vec3 x = frame.point(a, b);
        return q.trace(x) - q.contract(x, nu);
      },
      frame, q.support_radius(), spec);
}

namespace {

double build_w_impl(const SmoothField& v, const LineNH& line, HalfPlane variant,
                    const QuadratureSpec& spec, bool absolute) {
  if (v.rank() != 1) throw std::invalid_argument("build_w: expects a rank-1 field");
  double R = v.support_radius();
  double k = line.k();
  double pad = 1.0 / spec.points_per_unit;

  // Clip x3 to where the boundary-projection line meets the ball with the
  // free coordinate unconstrained: (y_i + a_i x3)^2 + x3^2 <= R^2.
  double yi = (variant == HalfPlane::H2) ? line.y1 : line.y2;
  double ai = (variant == HalfPlane::H2) ? line.a1 : line.a2;
  double A = 1.0 + ai * ai, B = 2.0 * yi * ai, C = yi * yi - R * R;
  double disc = B * B - 4.0 * A * C;
  if (disc <= 0.0) return 0.0;
  double sq = std::sqrt(disc);
  double z0 = (-B - sq) / (2.0 * A) - pad, z1 = (-B + sq) / (2.0 * A) + pad;

  auto chord = [&](double fixed, double x3) {
    double c2 = R * R - fixed * fixed - x3 * x3;
    return c2 > 0.0 ? std::sqrt(c2) : 0.0;
  };

  auto integrand = [&](const Vec3& x) {
    Vec3 u = v.vector(x);
    double along = line.a1 * u.x + line.a2 * u.y + u.z;
    double val = (variant == HalfPlane::H2)
                     ? along * (u.x - line.a1 * u.z) / k
                     : -along * (u.y - line.a2 * u.z) / k;
    return absolute ? std::abs(val) : val;
  };

  int zp = panel_count(z1 - z0, spec);
  return composite(
      [&](double x3) {
        double l1 = line.y1 + line.a1 * x3;
        double l2 = line.y2 + line.a2 * x3;
        if (variant == HalfPlane::H2) {
          double c = chord(l1, x3);
          double lo = std::max(l2, -c - pad), hi = c + pad;
          if (hi <= lo) return 0.0;
          return composite(
              [&](double x2) { return integrand({l1, x2, x3}); }, lo, hi,
              panel_count(hi - lo, spec), spec.order);
        }
        double c = chord(l2, x3);
        double lo = std::max(l1, -c - pad), hi = c + pad;
        if (hi <= lo) return 0.0;
        return composite([&](double x1) { return integrand({x1, l2, x3}); }, lo,
                         hi, panel_count(hi - lo, spec), spec.order);
      },
      z0, z1, zp, spec.order);
}

}  // namespace

double build_w(const SmoothField& v, const LineNH& line, HalfPlane variant,
               const QuadratureSpec& spec) {
  return build_w_impl(v, line, variant, spec, false);
}

double build_w_mass(const SmoothField& v, const LineNH& line, HalfPlane variant,
                    const QuadratureSpec& spec) {
  return build_w_impl(v, line, variant, spec, true);
}

double iq_zero_mass(const SmoothField& v, const SmoothField& p,
                    const LineNH& line, const QuadratureSpec& spec) {
  double k = line.k();
  Vec3 e = line.unit_direction();
  double R = std::max(v.support_radius(), p.support_radius());
  return k * integrate_line(
                 [&](double t) {
                   Vec3 x = line.point(t);
                   Vec3 u = v.vector(x);
                   double ve = dot(u, e);
                   return std::abs(p.scalar(x)) + norm2(u) + 2.0 * ve * ve;
                 },
                 line, R, spec);
}

double radon_q0_mass(const SmoothField& v, const SmoothField& p,
                     const PlaneFrame& frame, const QuadratureSpec& spec) {
  const Vec3& nu = frame.normal();
  double R = std::max(v.support_radius(), p.support_radius());
  return 2.0 * integrate_plane(
                   [&](double a, double b) {
                     Vec3 x = frame.point(a, b);
                     double vn = dot(v.vector(x), nu);
                     return std::abs(p.scalar(x)) + vn * vn;
                   },
                   frame, R, spec);
}

Vec2 build_F(const SmoothField& v, double x1, double x2,
             const QuadratureSpec& spec) {
  double R = v.support_radius();
  double c2 = R * R - x1 * x1 - x2 * x2;
  if (c2 <= 0.0) return {0.0, 0.0};
  double c = std::sqrt(c2);
  int p = panel_count(2.0 * c, spec);
  double f1 = composite(
      [&](double x3) {
        Vec3 u = v.vector({x1, x2, x3});
        return -u.y * u.z;
      },
      -c, c, p, spec.order);
  double f2 = composite(
      [&](double x3) {
        Vec3 u = v.vector({x1, x2, x3});
        return u.x * u.z;
      },
      -c, c, p, spec.order);
  return {f1, f2};
}

double w0_ray(const SmoothField& v, const Vec2& p0, const Vec2& ray_direction,
              const QuadratureSpec& spec) {
  double n = norm(ray_direction);
  if (std::abs(n - 1.0) > 1e-12)
    throw std::invalid_argument("w0_ray: ray direction must be a unit vector");
  double R = v.support_radius();
  // exit parameter of the support disc |P| <= R along the ray
  double B = 2.0 * dot(p0, ray_direction), C = dot(p0, p0) - R * R;
  double disc = B * B - 4.0 * C;
  if (disc <= 0.0) return 0.0;
  double sq = std::sqrt(disc);
  double s1 = (-B + sq) / 2.0;
  if (s1 <= 0.0) return 0.0;
  double s0 = std::max(0.0, (-B - sq) / 2.0);
  return composite(
      [&](double s) {
        Vec2 q = p0 + ray_direction * s;
        Vec2 F = build_F(v, q.x, q.y, spec);
        return dot(ray_direction, F);
      },
      s0, s1, panel_count(s1 - s0, spec), spec.order);
}

double iq_zero_lineintegral(const SmoothField& v, const SmoothField& p,
                            const LineNH& line, const QuadratureSpec& spec) {
  double k = line.k();
  Vec3 e = line.unit_direction();
  double R = std::max(v.support_radius(), p.support_radius());
  return k * integrate_line(
                 [&](double t) {
                   Vec3 x = line.point(t);
                   Vec3 u = v.vector(x);
                   double ve = dot(u, e);
                   return p.scalar(x) + norm2(u) - 2.0 * ve * ve;
                 },
                 line, R, spec);
}

struct GrassmannFunction::Cache {
  struct Key {
    std::int64_t a, b, c, d;
    bool operator==(const Key& o) const {
      return a == o.a && b == o.b && c == o.c && d == o.d;
    }
  };
  struct KeyHash {
    size_t operator()(const Key& k) const {
      std::uint64_t h = 1469598103934665603ull;
      for (std::int64_t v : {k.a, k.b, k.c, k.d}) {
        h ^= (std::uint64_t)v;
        h *= 1099511628211ull;
      }
      return (size_t)h;
    }
  };
  std::mutex mu;
  std::unordered_map<Key, double, KeyHash> map;
};

GrassmannFunction::GrassmannFunction(std::function<double(const LineNH&)> eval,
                                     std::string provenance, bool memoize)
    : eval_(std::move(eval)), provenance_(std::move(provenance)) {
  if (memoize) cache_ = std::make_shared<Cache>();
}

double GrassmannFunction::operator()(const LineNH& m) const {
  if (!cache_) return eval_(m);
  auto q = [](double x) { return (std::int64_t)std::llround(x * 1e9); };
  Cache::Key key{q(m.y1), q(m.y2), q(m.a1), q(m.a2)};
  {
    std::lock_guard<std::mutex> lock(cache_->mu);
    auto it = cache_->map.find(key);
    if (it != cache_->map.end()) return it->second;
  }
  double value = eval_(m);
  std::lock_guard<std::mutex> lock(cache_->mu);
  cache_->map.emplace(key, value);
  return value;
}

GrassmannFunction make_xray_function(const SmoothField& f,
                                     const QuadratureSpec& spec, bool memoize) {
  return GrassmannFunction(
      [f, spec](const LineNH& m) { return xray(f, m, spec); }, "xray", memoize);
}

GrassmannFunction make_unit_xray_function(const SmoothField& f,
                                          const QuadratureSpec& spec,
                                          bool memoize) {
  int h = f.rank();
  return GrassmannFunction(
      [f, spec, h](const LineNH& m) {
        return std::pow(m.k(), 1 - h) * xray(f, m, spec);
      },
      "unit_xray", memoize);
}

GrassmannFunction make_w_function(const SmoothField& v,
                                  const QuadratureSpec& spec, HalfPlane variant,
                                  bool memoize) {
  return GrassmannFunction(
      [v, spec, variant](const LineNH& m) { return build_w(v, m, variant, spec); },
      variant == HalfPlane::H2 ? "w_h2" : "w_h1", memoize);
}

GrassmannFunction make_iq0_function(const SmoothField& v, const SmoothField& p,
                                    const QuadratureSpec& spec, bool memoize) {
  return GrassmannFunction(
      [v, p, spec](const LineNH& m) { return iq_zero_lineintegral(v, p, m, spec); },
      "iq0", memoize);
}

}  // namespace ig
