#include "ig/verify.hpp"

#include <algorithm>
#include <cmath>

namespace ig {

namespace {

const char* kRadialOnly =
    "radial solution family only; no non-radial compactly supported solutions "
    "are available constructively";

std::vector<LinearCoeff> random_coeffs(std::mt19937_64& rng, int n) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<LinearCoeff> cs(n);
  for (auto& c : cs) {
    c.b = u(rng);
    c.g = {u(rng), u(rng), u(rng)};
  }
  return cs;
}

std::array<double, 4> line_coords(const LineNH& m) {
  return {m.y1, m.y2, m.a1, m.a2};
}

std::array<double, 4> plane_coords(const PlaneFrame& f) {
  return {f.normal().x, f.normal().y, f.normal().z, f.offset()};
}

}  // namespace

double ResidualReport::max_residual() const {
  double r = 0.0;
  for (const auto& s : samples) r = std::max(r, std::abs(s.residual));
  return r;
}

std::vector<ResidualReport> suite_lemma31(const SmoothField& v,
                                          const SmoothField& p, int n_planes,
                                          int n_z, std::uint64_t seed,
                                          const VerifyContext& cx,
                                          double tolerance) {
  (void)p;  // the identity involves only v; p certifies the solution property upstream
  auto planes = sample_planes(seed, n_planes, 0.8 * v.support_radius());
  auto angles = sample_uniform(seed + 1, n_planes * n_z, 0.0, 2.0 * M_PI);

  ResidualReport rep;
  rep.suite = "lemma31";
  rep.seed = seed;
  rep.tolerance = tolerance;
  rep.restriction = kRadialOnly;
  rep.samples.resize(n_planes * n_z);
  std::vector<double> masses(n_planes);

  parallel_for(n_planes, cx.jobs, [&](int i) {
    const PlaneFrame& L = planes[i];
    masses[i] = integrate_plane(
        [&](double a, double b) { return norm2(v.vector(L.point(a, b))); }, L,
        v.support_radius(), cx.quad);
    for (int j = 0; j < n_z; ++j) {
      double th = angles[i * n_z + j];
      Vec3 z = std::cos(th) * L.basis1() + std::sin(th) * L.basis2();
      double r = integrate_plane(
          [&](double a, double b) {
            Vec3 u = v.vector(L.point(a, b));
            return dot(u, z) * dot(u, L.normal());
          },
          L, v.support_radius(), cx.quad);
      rep.samples[i * n_z + j] = {i * n_z + j, plane_coords(L), r};
    }
  });
  rep.scale = *std::max_element(masses.begin(), masses.end());
  return {rep};
}

std::vector<ResidualReport> suite_kernel_and_range(
    const RadialProfile& psi, int n_kernel_lines, int n_range_lines,
    std::uint64_t seed, const VerifyContext& cx, double tol_kernel,
    double tol_range, double tol_range2, int n_range2_lines) {
  std::mt19937_64 rng(seed);
  std::vector<ResidualReport> out;

  // (a) kernel: I(d_s u) = 0 for random potentials of rank h-1.
  for (int h = 1; h <= 2; ++h) {
    ResidualReport rep;
    rep.suite = h == 1 ? "kernel_h1" : "kernel_h2";
    rep.seed = seed;
    rep.tolerance = tol_kernel;

    const int n_potentials = 3;
    std::vector<SmoothField> images;
    double scale = 0.0;
    for (int q = 0; q < n_potentials; ++q)
      images.push_back(symmetric_gradient(
          modulated_field(h - 1, psi, random_coeffs(rng, SmoothField::ncomp(h - 1)))));
    // comparable rank-h field from the same draw scheme sets the scale
    SmoothField reference =
        modulated_field(h, psi, random_coeffs(rng, SmoothField::ncomp(h)));

    auto lines = sample_lines(seed + 10 * h, n_kernel_lines, {0.8, 1.0});
    rep.samples.resize(n_kernel_lines * n_potentials);
    std::vector<double> refs(n_kernel_lines);
    parallel_for(n_kernel_lines, cx.jobs, [&](int i) {
      refs[i] = std::abs(xray(reference, lines[i], cx.quad));
      for (int q = 0; q < n_potentials; ++q) {
        double r = xray(images[q], lines[i], cx.quad);
        rep.samples[i * n_potentials + q] = {i * n_potentials + q,
                                             line_coords(lines[i]), r};
      }
    });
    scale = *std::max_element(refs.begin(), refs.end());
    rep.scale = scale;
    out.push_back(std::move(rep));
  }

  // (b) range: L^{h+1} phi = 0 for phi = X-ray images.
  for (int h = 0; h <= 2; ++h) {
    int n = h == 2 ? n_range2_lines : n_range_lines;
    if (n <= 0) continue;
    ResidualReport rep;
    rep.suite = "range_h" + std::to_string(h);
    rep.seed = seed;
    rep.tolerance = h == 2 ? tol_range2 : tol_range;

    SmoothField f =
        modulated_field(h, psi, random_coeffs(rng, SmoothField::ncomp(h)));
    GrassmannFunction phi = make_xray_function(f, cx.quad, true);
    GrassmannFunction inner = phi;
    for (int l = 0; l < h; ++l)
      inner = make_op_function(LineOp::JohnL, inner,
                               cx.fd.scaled(std::pow(2.0, l)), true);
    FDSpec outer_fd = cx.fd.scaled(std::pow(2.0, h));

    auto lines = sample_lines(seed + 100 + h, n, {0.6, 0.8});
    rep.samples.resize(n);
    std::vector<double> scales(n);
    parallel_for(n, cx.jobs, [&](int i) {
      auto [t1, t2] = john_L_terms(inner, lines[i], outer_fd);
      rep.samples[i] = {i, line_coords(lines[i]), t1 - t2};
      scales[i] = std::abs(t1) + std::abs(t2);
    });
    rep.scale = *std::max_element(scales.begin(), scales.end());
    out.push_back(std::move(rep));
  }
  return out;
}

std::vector<ResidualReport> suite_w_construction(const SmoothField& v,
                                                 const SmoothField& p,
                                                 int n_samples,
                                                 std::uint64_t seed,
                                                 const VerifyContext& cx,
                                                 double tol_construction,
                                                 double tol_cor35) {
  std::vector<ResidualReport> out;
  double R = v.support_radius();

  {  // H1 vs H2 on the same solution
    ResidualReport rep;
    rep.suite = "w_h1_vs_h2";
    rep.seed = seed;
    rep.tolerance = tol_construction;
    rep.restriction = kRadialOnly;
    auto lines = sample_lines(seed, n_samples, {0.8 * R, 1.0});
    rep.samples.resize(n_samples);
    std::vector<double> masses(n_samples);
    parallel_for(n_samples, cx.jobs, [&](int i) {
      double w2 = build_w(v, lines[i], HalfPlane::H2, cx.quad);
      double w1 = build_w(v, lines[i], HalfPlane::H1, cx.quad);
      rep.samples[i] = {i, line_coords(lines[i]), w1 - w2};
      masses[i] = build_w_mass(v, lines[i], HalfPlane::H2, cx.quad);
    });
    rep.scale = *std::max_element(masses.begin(), masses.end());
    out.push_back(std::move(rep));
  }

  {  // ray independence of w0 and w(.,.,0,0) = w0
    ResidualReport rays, vert;
    rays.suite = "w0_ray_independence";
    vert.suite = "w_vertical_equals_w0";
    rays.seed = vert.seed = seed;
    rays.tolerance = vert.tolerance = tol_construction;
    rays.restriction = vert.restriction = kRadialOnly;
    auto xs = sample_uniform(seed + 1, 2 * n_samples, -0.7 * R, 0.7 * R);
    auto angles = sample_uniform(seed + 2, n_samples, 0.0, 2.0 * M_PI);
    rays.samples.resize(n_samples);
    vert.samples.resize(n_samples);
    std::vector<double> masses(n_samples);
    parallel_for(n_samples, cx.jobs, [&](int i) {
      Vec2 p0{xs[2 * i], xs[2 * i + 1]};
      Vec2 d1{std::cos(angles[i]), std::sin(angles[i])};
      Vec2 d2{-d1.y, d1.x};
      double w01 = w0_ray(v, p0, d1, cx.quad);
      double w02 = w0_ray(v, p0, d2, cx.quad);
      LineNH vertical{p0.x, p0.y, 0.0, 0.0};
      double w = build_w(v, vertical, HalfPlane::H2, cx.quad);
      rays.samples[i] = {i, {p0.x, p0.y, 0.0, 0.0}, w01 - w02};
      vert.samples[i] = {i, {p0.x, p0.y, 0.0, 0.0}, w - w01};
      masses[i] = build_w_mass(v, vertical, HalfPlane::H2, cx.quad);
    });
    double scale = *std::max_element(masses.begin(), masses.end());
    rays.scale = vert.scale = scale;
    out.push_back(std::move(rays));
    out.push_back(std::move(vert));
  }

  {  // 2-D X-ray of F vanishes
    ResidualReport rep;
    rep.suite = "xray_F_2d";
    rep.seed = seed;
    rep.tolerance = tol_construction;
    rep.restriction = kRadialOnly;
    auto xs = sample_uniform(seed + 3, 2 * n_samples, -0.7 * R, 0.7 * R);
    auto angles = sample_uniform(seed + 4, n_samples, 0.0, 2.0 * M_PI);
    rep.samples.resize(n_samples);
    std::vector<double> masses(n_samples);
    parallel_for(n_samples, cx.jobs, [&](int i) {
      Vec2 q0{xs[2 * i], xs[2 * i + 1]};
      Vec2 u{std::cos(angles[i]), std::sin(angles[i])};
      // clip the 2-D line to the support disc
      double B = 2.0 * dot(q0, u), C = dot(q0, q0) - R * R;
      double disc = B * B - 4.0 * C;
      double val = 0.0, mass = 0.0;
      if (disc > 0.0) {
        double sq = std::sqrt(disc);
        double t0 = (-B - sq) / 2.0, t1 = (-B + sq) / 2.0;
        QuadratureSpec spec = cx.quad;
        val = integrate_interval(
            [&](double t) {
              Vec2 F = build_F(v, q0.x + t * u.x, q0.y + t * u.y, spec);
              return dot(F, u);
            },
            t0, t1, spec);
        // |F| itself vanishes identically for the radial family, so the
        // scale is the L1 mass of the F integrand over the swept strip.
        mass = integrate_interval(
            [&](double t) {
              LineNH chord{q0.x + t * u.x, q0.y + t * u.y, 0.0, 0.0};
              return integrate_line(
                  [&](double x3) {
                    Vec3 vv = v.vector(chord.point(x3));
                    return std::abs(vv.x * vv.z) + std::abs(vv.y * vv.z);
                  },
                  chord, v.support_radius(), spec);
            },
            t0, t1, spec);
      }
      rep.samples[i] = {i, {q0.x, q0.y, u.x, u.y}, val};
      masses[i] = mass;
    });
    rep.scale = *std::max_element(masses.begin(), masses.end());
    out.push_back(std::move(rep));
  }

  {  // mixed-derivative formulas at the origin line
    ResidualReport rep;
    rep.suite = "cor35_origin_derivatives";
    rep.seed = seed;
    rep.tolerance = tol_cor35;
    rep.restriction = kRadialOnly;
    LineNH origin{0.0, 0.0, 0.0, 0.0};
    GrassmannFunction w = make_w_function(v, cx.quad, HalfPlane::H2, true);
    GrassmannFunction w1 = make_w_function(v, cx.quad, HalfPlane::H1, true);

    auto axis_integral = [&](const std::function<double(double)>& g) {
      LineNH vert{0.0, 0.0, 0.0, 0.0};
      return integrate_line(g, vert, std::max(R, p.support_radius()), cx.quad);
    };
    auto d_vv = [&](int a, int b, int k, const Vec3& x) {
      // d/dx_k (v^a v^b)
      double j[9];
      Vec3 u = v.vector(x);
      v.derivatives(x, j);
      return j[a * 3 + k] * u[b] + u[a] * j[b * 3 + k];
    };

    // (w12): d2 w / (dy2 da1) from the H2 formula
    double fd_w12 = mixed_partial(w, origin, 1, 2, cx.fd);
    double int_w12 = axis_integral([&](double x3) {
      Vec3 x{0.0, 0.0, x3};
      Vec3 u = v.vector(x);
      return u.z * u.z - u.x * u.x - x3 * d_vv(2, 0, 0, x);
    });
    // (w21): d2 w / (dy1 da2) from the H1 formula
    double fd_w21 = mixed_partial(w1, origin, 0, 3, cx.fd);
    double int_w21 = axis_integral([&](double x3) {
      Vec3 x{0.0, 0.0, x3};
      Vec3 u = v.vector(x);
      return u.y * u.y - u.z * u.z + x3 * d_vv(2, 1, 1, x);
    });
    // (de): fiber Laplacian in y at the origin line
    double fd_de = op_laplaceM(w, origin, cx.fd);
    double int_de = axis_integral([&](double x3) {
      Vec3 x{0.0, 0.0, x3};
      return d_vv(1, 2, 0, x) - d_vv(0, 2, 1, x);
    });
    // (L): difference of the mixed derivatives against the momentum identity
    double fd_L = mixed_partial(w, origin, 0, 3, cx.fd) - fd_w12;
    double int_L = axis_integral([&](double x3) {
      Vec3 x{0.0, 0.0, x3};
      Vec3 u = v.vector(x);
      return p.scalar(x) + u.x * u.x + u.y * u.y - u.z * u.z;
    });

    rep.samples = {{0, {}, fd_w12 - int_w12},
                   {1, {}, fd_w21 - int_w21},
                   {2, {}, fd_de - int_de},
                   {3, {}, fd_L - int_L}};
    double scale = 0.0;
    scale = std::max(scale, axis_integral([&](double x3) {
              Vec3 x{0.0, 0.0, x3};
              Vec3 u = v.vector(x);
              return u.z * u.z + u.x * u.x + std::abs(x3 * d_vv(2, 0, 0, x));
            }));
    scale = std::max(scale, axis_integral([&](double x3) {
              Vec3 x{0.0, 0.0, x3};
              return std::abs(d_vv(1, 2, 0, x)) + std::abs(d_vv(0, 2, 1, x));
            }));
    scale = std::max(scale, axis_integral([&](double x3) {
              Vec3 x{0.0, 0.0, x3};
              Vec3 u = v.vector(x);
              return std::abs(p.scalar(x)) + norm2(u);
            }));
    rep.scale = scale;
    out.push_back(std::move(rep));
  }
  return out;
}

std::vector<ResidualReport> suite_main_pde(const SmoothField& v,
                                           const SmoothField& p, int n_lines,
                                           int n_scalar_lines,
                                           std::uint64_t seed,
                                           const VerifyContext& cx,
                                           double tol_pde, double tol_scalar) {
  std::vector<ResidualReport> out;
  GrassmannFunction w = make_w_function(v, cx.quad, HalfPlane::H2, true);
  GrassmannFunction ivv = make_unit_xray_function(outer_square(v), cx.quad, true);

  auto lines = sample_lines(seed, n_lines, {0.6, 0.8});
  std::vector<double> ivv_mag(n_lines);
  ResidualReport p2w, pivv;
  p2w.suite = "main_pde_p2w";
  pivv.suite = "main_pde_pivv";
  p2w.seed = pivv.seed = seed;
  p2w.tolerance = pivv.tolerance = tol_pde;
  p2w.restriction = pivv.restriction = kRadialOnly;
  p2w.samples.resize(n_lines);
  pivv.samples.resize(n_lines);
  parallel_for(n_lines, cx.jobs, [&](int i) {
    const LineNH& m = lines[i];
    double lap_w = op_laplaceM(w, m, cx.fd);
    double p2 = op_power(LineOp::P, 2, w, m, cx.fd);
    double piv = op_P(ivv, m, cx.fd);
    p2w.samples[i] = {i, line_coords(m), p2 + 4.0 * lap_w};
    pivv.samples[i] = {i, line_coords(m), piv - 2.0 * lap_w};
    ivv_mag[i] = std::abs(ivv(m));
  });
  double scale = *std::max_element(ivv_mag.begin(), ivv_mag.end());
  p2w.scale = pivv.scale = scale;
  out.push_back(std::move(p2w));
  out.push_back(std::move(pivv));

  {  // P annihilates scalar X-ray images
    ResidualReport rep;
    rep.suite = "scalar_lemma";
    rep.seed = seed;
    rep.tolerance = tol_scalar;
    GrassmannFunction ip = make_unit_xray_function(p, cx.quad, true);
    auto slines = sample_lines(seed + 5, n_scalar_lines, {0.6, 0.8});
    rep.samples.resize(n_scalar_lines);
    std::vector<double> grads(n_scalar_lines);
    parallel_for(n_scalar_lines, cx.jobs, [&](int i) {
      rep.samples[i] = {i, line_coords(slines[i]), op_P(ip, slines[i], cx.fd)};
      auto g = chart_gradient(ip, slines[i], cx.fd);
      grads[i] = std::sqrt(g[0] * g[0] + g[1] * g[1] + g[2] * g[2] + g[3] * g[3]);
    });
    rep.scale = *std::max_element(grads.begin(), grads.end());
    out.push_back(std::move(rep));
  }
  return out;
}

std::vector<ResidualReport> suite_conjectures_radial(
    const RadialProfile& psi, const Vec3& center, int n_lines, int n_planes,
    std::uint64_t seed, const VerifyContext& cx, double tolerance) {
  SmoothField v = translate(radial_velocity(psi), center);
  SmoothField p = translate(radial_pressure(psi), center);
  SmoothField q0 = q_zero(v, p);
  double R = v.support_radius();

  std::vector<ResidualReport> out;
  auto lines = sample_lines(seed, n_lines, {0.8 * R, 1.0});

  ResidualReport rw, riq;
  rw.suite = "conjecture_w";
  riq.suite = "conjecture_iq0";
  rw.seed = riq.seed = seed;
  rw.tolerance = riq.tolerance = tolerance;
  rw.restriction = riq.restriction = kRadialOnly;
  rw.samples.resize(n_lines);
  riq.samples.resize(n_lines);
  std::vector<double> wmass(n_lines), iqmass(n_lines);
  parallel_for(n_lines, cx.jobs, [&](int i) {
    const LineNH& m = lines[i];
    rw.samples[i] = {i, line_coords(m), build_w(v, m, HalfPlane::H2, cx.quad)};
    riq.samples[i] = {i, line_coords(m), iq_zero_lineintegral(v, p, m, cx.quad)};
    wmass[i] = build_w_mass(v, m, HalfPlane::H2, cx.quad);
    iqmass[i] = iq_zero_mass(v, p, m, cx.quad);
  });
  rw.scale = *std::max_element(wmass.begin(), wmass.end());
  riq.scale = *std::max_element(iqmass.begin(), iqmass.end());
  out.push_back(std::move(rw));
  out.push_back(std::move(riq));

  ResidualReport rj;
  rj.suite = "conjecture_jq0";
  rj.seed = seed;
  rj.tolerance = tolerance;
  rj.restriction = kRadialOnly;
  auto planes = sample_planes(seed + 7, n_planes, 0.8 * R);
  rj.samples.resize(n_planes);
  std::vector<double> jmass(n_planes);
  parallel_for(n_planes, cx.jobs, [&](int i) {
    rj.samples[i] = {i, plane_coords(planes[i]),
                     radon_plane(q0, planes[i], cx.quad)};
    jmass[i] = radon_q0_mass(v, p, planes[i], cx.quad);
  });
  rj.scale = *std::max_element(jmass.begin(), jmass.end());
  out.push_back(std::move(rj));
  return out;
}

std::vector<ResidualReport> suite_pointwise_pdes(const SmoothField& v,
                                                 const SmoothField& p,
                                                 int n_points,
                                                 std::uint64_t seed,
                                                 const VerifyContext& cx,
                                                 double tolerance) {
  SmoothField q0 = q_zero(v, p);
  SmoothField psi_v = psi_tensor(v);
  double R = v.support_radius();
  auto points = sample_points(seed, n_points, 0.9 * R);

  ResidualReport sum_rep, sys_rep, psi_rep;
  sum_rep.suite = "pointwise_sum";
  sys_rep.suite = "pointwise_system";
  psi_rep.suite = "psi_radial";
  sum_rep.seed = sys_rep.seed = psi_rep.seed = seed;
  sum_rep.tolerance = sys_rep.tolerance = psi_rep.tolerance = tolerance;
  sum_rep.restriction = sys_rep.restriction = psi_rep.restriction = kRadialOnly;
  sum_rep.samples.resize(n_points);
  sys_rep.samples.resize(n_points);
  psi_rep.samples.resize(n_points);
  std::vector<double> hmax(n_points);

  double h = 1e-3 * R;
  parallel_for(n_points, cx.jobs, [&](int idx) {
    const Vec3& x = points[idx];
    // Hessians of all six components via 4th-order differences of the
    // (analytic) first derivatives.
    double H[6][3][3];
    double dp1[18], dm1[18], dp2[18], dm2[18];
    for (int l = 0; l < 3; ++l) {
      Vec3 e{};
      e[l] = 1.0;
      q0.derivatives(x + h * e, dp1);
      q0.derivatives(x - h * e, dm1);
      q0.derivatives(x + 2.0 * h * e, dp2);
      q0.derivatives(x - 2.0 * h * e, dm2);
      for (int c = 0; c < 6; ++c)
        for (int k = 0; k < 3; ++k)
          H[c][k][l] = (-dp2[c * 3 + k] + 8.0 * dp1[c * 3 + k] -
                        8.0 * dm1[c * 3 + k] + dm2[c * 3 + k]) /
                       (12.0 * h);
    }
    auto hess = [&](int i, int j, int k, int l) {
      return 0.5 * (H[sym_index(i, j)][k][l] + H[sym_index(i, j)][l][k]);
    };

    double hm = 0.0;
    for (int c = 0; c < 6; ++c)
      for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l) hm = std::max(hm, std::abs(H[c][k][l]));
    hmax[idx] = hm;

    double div2 = 0.0, lap_tr = 0.0;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) div2 += hess(i, j, i, j);
    for (int i = 0; i < 3; ++i)
      for (int l = 0; l < 3; ++l) lap_tr += hess(i, i, l, l);
    sum_rep.samples[idx] = {idx, {x.x, x.y, x.z, 0.0}, div2 - lap_tr};

    double worst = 0.0;
    for (auto [i, j] : {std::pair{0, 1}, {0, 2}, {1, 2}}) {
      double r = 2.0 * hess(i, j, i, j) - hess(i, i, j, j) - hess(j, j, i, i);
      worst = std::max(worst, std::abs(r));
    }
    sys_rep.samples[idx] = {idx, {x.x, x.y, x.z, 0.0}, worst};

    double pv[6];
    psi_v.values(x, pv);
    double pmax = 0.0;
    for (double c : pv) pmax = std::max(pmax, std::abs(c));
    psi_rep.samples[idx] = {idx, {x.x, x.y, x.z, 0.0}, pmax};
  });

  double scale = *std::max_element(hmax.begin(), hmax.end());
  sum_rep.scale = sys_rep.scale = psi_rep.scale = scale;
  return {sum_rep, sys_rep, psi_rep};
}

std::vector<ResidualReport> suite_self_convergence(const SmoothField& v,
                                                   const SmoothField& p,
                                                   int n_samples,
                                                   std::uint64_t seed,
                                                   const VerifyContext& cx,
                                                   double tolerance) {
  SmoothField q0 = q_zero(v, p);
  double R = v.support_radius();
  auto lines = sample_lines(seed, n_samples, {0.7 * R, 1.0});
  auto planes = sample_planes(seed + 1, n_samples, 0.7 * R);
  QuadratureSpec fine = cx.quad.doubled();

  ResidualReport rep;
  rep.suite = "self_convergence";
  rep.seed = seed;
  rep.tolerance = tolerance;
  rep.scale = 1.0;
  const int kinds = 5;
  rep.samples.resize(n_samples * kinds);
  parallel_for(n_samples, cx.jobs, [&](int i) {
    const LineNH& m = lines[i];
    auto rel = [](double a, double b) { return (a - b) / (1.0 + std::abs(b)); };
    double r0 = rel(xray(p, m, cx.quad), xray(p, m, fine));
    double r1 = rel(xray(q0, m, cx.quad), xray(q0, m, fine));
    double r2 = rel(build_w(v, m, HalfPlane::H2, cx.quad),
                    build_w(v, m, HalfPlane::H2, fine));
    double r3 = rel(iq_zero_lineintegral(v, p, m, cx.quad),
                    iq_zero_lineintegral(v, p, m, fine));
    double r4 = rel(radon_plane(q0, planes[i], cx.quad),
                    radon_plane(q0, planes[i], fine));
    rep.samples[i * kinds + 0] = {i * kinds + 0, line_coords(m), r0};
    rep.samples[i * kinds + 1] = {i * kinds + 1, line_coords(m), r1};
    rep.samples[i * kinds + 2] = {i * kinds + 2, line_coords(m), r2};
    rep.samples[i * kinds + 3] = {i * kinds + 3, line_coords(m), r3};
    rep.samples[i * kinds + 4] = {i * kinds + 4, plane_coords(planes[i]), r4};
  });
  return {rep};
}

}  // namespace ig
