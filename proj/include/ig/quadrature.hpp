#pragma once

#include <functional>
#include <span>
#include <vector>

#include "ig/core.hpp"

namespace ig {

// Composite Gauss-Legendre policy. `points_per_unit` counts panels per unit
// of arc length; `order` is the Gauss order within each panel. Deterministic
// by construction: no adaptivity, no randomness.
struct QuadratureSpec {
  int points_per_unit = 8;
  int order = 16;

  QuadratureSpec doubled() const { return {points_per_unit, 2 * order}; }
};

// Nodes/weights of the order-n Gauss-Legendre rule on [-1,1].
// Tables are computed once per order and shared read-only.
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

const GaussRule& gauss_rule(int order);

// Composite Gauss-Legendre integral of f over [a,b].
double integrate_interval(const std::function<double(double)>& f, double a,
                          double b, const QuadratureSpec& spec);

// Iterated 2-D integral: outer variable u over [ua,ub], inner variable over
// [lo(u), hi(u)]. The inner integral of a smooth integrand is smooth in u, so
// composite Gauss in both directions keeps full order even when the inner
// limits are sloped.
double integrate_iterated(const std::function<double(double, double)>& f,
                          double ua, double ub,
                          const std::function<double(double)>& lo,
                          const std::function<double(double)>& hi,
                          const QuadratureSpec& spec);

}  // namespace ig
