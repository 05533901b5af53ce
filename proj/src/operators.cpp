#include "ig/operators.hpp"

#include <cmath>

namespace ig {

namespace {

// chart coordinates: 0 = y1, 1 = y2, 2 = a1, 3 = a2
LineNH shifted(const LineNH& m, int var, double d) {
  LineNH s = m;
  switch (var) {
    case 0: s.y1 += d; break;
    case 1: s.y2 += d; break;
    case 2: s.a1 += d; break;
    default: s.a2 += d; break;
  }
  return s;
}

double d1(const GrassmannFunction& u, const LineNH& m, int var, double h,
          int order) {
  if (order == 2)
    return (u(shifted(m, var, h)) - u(shifted(m, var, -h))) / (2.0 * h);
  return (-u(shifted(m, var, 2 * h)) + 8.0 * u(shifted(m, var, h)) -
          8.0 * u(shifted(m, var, -h)) + u(shifted(m, var, -2 * h))) /
         (12.0 * h);
}

double d2_pure(const GrassmannFunction& u, const LineNH& m, int var, double h,
               int order) {
  if (order == 2)
    return (u(shifted(m, var, h)) - 2.0 * u(m) + u(shifted(m, var, -h))) /
           (h * h);
  return (-u(shifted(m, var, 2 * h)) + 16.0 * u(shifted(m, var, h)) -
          30.0 * u(m) + 16.0 * u(shifted(m, var, -h)) -
          u(shifted(m, var, -2 * h))) /
         (12.0 * h * h);
}

double d2_mixed(const GrassmannFunction& u, const LineNH& m, int var1,
                double h1, int var2, double h2, int order) {
  // tensor product of the 1-D first-derivative stencils
  static const double c2[] = {-0.5, 0.5};
  static const int o2[] = {-1, 1};
  static const double c4[] = {1.0 / 12, -8.0 / 12, 8.0 / 12, -1.0 / 12};
  static const int o4[] = {-2, -1, 1, 2};
  const double* c = order == 2 ? c2 : c4;
  const int* o = order == 2 ? o2 : o4;
  int n = order == 2 ? 2 : 4;
  double sum = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      sum += c[i] * c[j] *
             u(shifted(shifted(m, var1, o[i] * h1), var2, o[j] * h2));
  return sum / (h1 * h2);
}

template <typename F>
double richardson(const F& eval, const FDSpec& fd) {
  // eval(spec) is the raw stencil value; central stencils carry even error
  // series, so each level gains two orders.
  int levels = std::max(0, fd.richardson);
  if (levels == 0) return eval(fd);
  std::vector<double> row(levels + 1);
  for (int i = 0; i <= levels; ++i) row[i] = eval(fd.scaled(std::pow(0.5, i)));
  double p0 = std::pow(2.0, fd.order);
  for (int l = 1; l <= levels; ++l) {
    double f = p0 * std::pow(4.0, l - 1);
    for (int i = levels; i >= l; --i) row[i] = (f * row[i] - row[i - 1]) / (f - 1.0);
  }
  return row[levels];
}

double raw_L(const GrassmannFunction& u, const LineNH& m, const FDSpec& fd) {
  return d2_mixed(u, m, 3, fd.step_alpha, 0, fd.step_y, fd.order) -
         d2_mixed(u, m, 2, fd.step_alpha, 1, fd.step_y, fd.order);
}

double raw_P(const GrassmannFunction& u, const LineNH& m, const FDSpec& fd) {
  double k = m.k();
  return k * k * raw_L(u, m, fd) + m.a1 * d1(u, m, 1, fd.step_y, fd.order) -
         m.a2 * d1(u, m, 0, fd.step_y, fd.order);
}

double raw_laplaceM(const GrassmannFunction& u, const LineNH& m,
                    const FDSpec& fd) {
  double k1 = m.k1(), k2 = m.k2();
  return k1 * k1 * d2_pure(u, m, 0, fd.step_y, fd.order) +
         k2 * k2 * d2_pure(u, m, 1, fd.step_y, fd.order) +
         2.0 * m.a1 * m.a2 * d2_mixed(u, m, 0, fd.step_y, 1, fd.step_y, fd.order);
}

}  // namespace

double mixed_partial(const GrassmannFunction& u, const LineNH& m, int var_a,
                     int var_b, const FDSpec& fd) {
  auto step = [](const FDSpec& s, int var) {
    return var < 2 ? s.step_y : s.step_alpha;
  };
  return richardson(
      [&](const FDSpec& s) {
        return d2_mixed(u, m, var_a, step(s, var_a), var_b, step(s, var_b),
                        s.order);
      },
      fd);
}

std::pair<double, double> john_L_terms(const GrassmannFunction& u,
                                       const LineNH& m, const FDSpec& fd) {
  return {mixed_partial(u, m, 3, 0, fd), mixed_partial(u, m, 2, 1, fd)};
}

std::array<double, 4> chart_gradient(const GrassmannFunction& u,
                                     const LineNH& m, const FDSpec& fd) {
  std::array<double, 4> g;
  for (int var = 0; var < 4; ++var)
    g[var] = richardson(
        [&](const FDSpec& s) {
          return d1(u, m, var, var < 2 ? s.step_y : s.step_alpha, s.order);
        },
        fd);
  return g;
}

double john_L(const GrassmannFunction& u, const LineNH& m, const FDSpec& fd) {
  return richardson([&](const FDSpec& s) { return raw_L(u, m, s); }, fd);
}

double op_P(const GrassmannFunction& u, const LineNH& m, const FDSpec& fd) {
  return richardson([&](const FDSpec& s) { return raw_P(u, m, s); }, fd);
}

double op_laplaceM(const GrassmannFunction& u, const LineNH& m,
                   const FDSpec& fd) {
  return richardson([&](const FDSpec& s) { return raw_laplaceM(u, m, s); }, fd);
}

double apply_op(LineOp op, const GrassmannFunction& u, const LineNH& m,
                const FDSpec& fd) {
  switch (op) {
    case LineOp::JohnL: return john_L(u, m, fd);
    case LineOp::P: return op_P(u, m, fd);
    default: return op_laplaceM(u, m, fd);
  }
}

GrassmannFunction make_op_function(LineOp op, const GrassmannFunction& u,
                                   const FDSpec& fd, bool memoize) {
  return GrassmannFunction(
      [op, u, fd](const LineNH& m) { return apply_op(op, u, m, fd); }, "op",
      memoize);
}

double op_power(LineOp op, int n, const GrassmannFunction& u, const LineNH& m,
                const FDSpec& fd) {
  if (n < 1 || n > 3)
    throw std::invalid_argument("op_power: n must be in {1,2,3}");
  if (n == 1) return apply_op(op, u, m, fd);
  GrassmannFunction inner = make_op_function(op, u, fd, true);
  for (int level = 2; level < n; ++level)
    inner = make_op_function(op, inner, fd.scaled(std::pow(2.0, level - 1)), true);
  return apply_op(op, inner, m, fd.scaled(std::pow(2.0, n - 1)));
}

}  // namespace ig
