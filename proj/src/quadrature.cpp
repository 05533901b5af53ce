#include "ig/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>

namespace ig {

namespace {

GaussRule compute_gauss_rule(int order) {
  if (order < 1) throw std::invalid_argument("gauss_rule: order must be >= 1");
  GaussRule rule;
  rule.nodes.resize(order);
  rule.weights.resize(order);
  const int n = order;
  // Newton iteration on P_n from the Chebyshev initial guess.
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      pp = n * (x * p1 - p0) / (x * x - 1.0);
      double dx = p1 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    double w = 2.0 / ((1.0 - x * x) * pp * pp);
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
  return rule;
}

}  // namespace

const GaussRule& gauss_rule(int order) {
  static std::mutex mu;
  static std::map<int, GaussRule> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(order);
  if (it == cache.end()) it = cache.emplace(order, compute_gauss_rule(order)).first;
  return it->second;
}

double integrate_interval(const std::function<double(double)>& f, double a,
                          double b, const QuadratureSpec& spec) {
  if (!(b > a)) return 0.0;
  const GaussRule& rule = gauss_rule(spec.order);
  int panels = std::max(1, (int)std::ceil(spec.points_per_unit * (b - a)));
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

double integrate_iterated(const std::function<double(double, double)>& f,
                          double ua, double ub,
                          const std::function<double(double)>& lo,
                          const std::function<double(double)>& hi,
                          const QuadratureSpec& spec) {
  return integrate_interval(
      [&](double u) {
        return integrate_interval([&](double v) { return f(u, v); }, lo(u),
                                  hi(u), spec);
      },
      ua, ub, spec);
}

}  // namespace ig
