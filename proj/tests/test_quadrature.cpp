#include <doctest.h>

#include <cmath>

#include "ig/quadrature.hpp"

using namespace ig;

namespace {

// Independent oracle: adaptive Simpson, no shared code with the library.
double simpson(const std::function<double(double)>& f, double a, double b,
               double fa, double fm, double fb, double eps, int depth) {
  double m = 0.5 * (a + b);
  double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  double flm = f(lm), frm = f(rm);
  double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  if (depth <= 0 || std::abs(left + right - whole) < 15.0 * eps)
    return left + right + (left + right - whole) / 15.0;
  return simpson(f, a, m, fa, flm, fm, 0.5 * eps, depth - 1) +
         simpson(f, m, b, fm, frm, fb, 0.5 * eps, depth - 1);
}

double adaptive_simpson(const std::function<double(double)>& f, double a,
                        double b, double eps = 1e-12) {
  double m = 0.5 * (a + b);
  return simpson(f, a, b, f(a), f(m), f(b), eps, 40);
}

}  // namespace

TEST_CASE("gauss rule basics") {
  const GaussRule& r = gauss_rule(16);
  REQUIRE(r.nodes.size() == 16);
  double wsum = 0.0;
  for (double w : r.weights) wsum += w;
  CHECK(wsum == doctest::Approx(2.0).epsilon(1e-14));
  // nodes are symmetric and strictly increasing
  for (size_t i = 0; i + 1 < r.nodes.size(); ++i) {
    CHECK(r.nodes[i] < r.nodes[i + 1]);
    CHECK(r.nodes[i] == doctest::Approx(-r.nodes[r.nodes.size() - 1 - i])
                            .epsilon(1e-14));
  }
}

TEST_CASE("polynomial exactness of order-n rule") {
  // order-g Gauss integrates degree 2g-1 exactly
  const GaussRule& r = gauss_rule(5);
  for (int deg = 0; deg <= 9; ++deg) {
    double s = 0.0;
    for (size_t i = 0; i < r.nodes.size(); ++i)
      s += r.weights[i] * std::pow(r.nodes[i], deg);
    double exact = deg % 2 == 1 ? 0.0 : 2.0 / (deg + 1);
    CHECK(s == doctest::Approx(exact).epsilon(1e-13));
  }
}

TEST_CASE("interval integral vs frozen constant") {
  // int_{-1}^{1} exp(-1/(1-t^2)) dt, 30-digit reference
  auto f = [](double t) {
    double d = 1.0 - t * t;
    return d > 0.0 ? std::exp(-1.0 / d) : 0.0;
  };
  double v = integrate_interval(f, -1.0, 1.0, QuadratureSpec{});
  CHECK(v == doctest::Approx(0.44399381616807944).epsilon(1e-13));
}

TEST_CASE("interval integral vs adaptive-Simpson oracle") {
  auto f = [](double t) { return std::exp(std::sin(3.0 * t)) * std::cos(t); };
  double v = integrate_interval(f, -2.0, 1.5, QuadratureSpec{});
  double o = adaptive_simpson(f, -2.0, 1.5);
  CHECK(v == doctest::Approx(o).epsilon(1e-10));
}

TEST_CASE("iterated integral over a sloped region") {
  // area between lines: int_0^1 int_{u/2}^{1+u} 1 dv du = 1.25
  QuadratureSpec spec;
  double area = integrate_iterated([](double, double) { return 1.0; }, 0.0,
                                   1.0, [](double u) { return 0.5 * u; },
                                   [](double u) { return 1.0 + u; }, spec);
  CHECK(area == doctest::Approx(1.25).epsilon(1e-13));
  // x*y over the same region, against the oracle applied to the inner closed form
  double v = integrate_iterated([](double u, double w) { return u * w; }, 0.0,
                                1.0, [](double u) { return 0.5 * u; },
                                [](double u) { return 1.0 + u; }, spec);
  double o = adaptive_simpson(
      [](double u) {
        double lo = 0.5 * u, hi = 1.0 + u;
        return u * 0.5 * (hi * hi - lo * lo);
      },
      0.0, 1.0);
  CHECK(v == doctest::Approx(o).epsilon(1e-12));
}

TEST_CASE("doubled spec changes smooth integrals below 1e-9 relative") {
  QuadratureSpec spec;
  auto f = [](double t) {
    double d = 1.0 - t * t;
    return d > 0.0 ? std::exp(-1.0 / d) * std::cos(4.0 * t) : 0.0;
  };
  double a = integrate_interval(f, -1.0, 1.0, spec);
  double b = integrate_interval(f, -1.0, 1.0, spec.doubled());
  CHECK(std::abs(a - b) <= 1e-9 * (1.0 + std::abs(b)));
}
