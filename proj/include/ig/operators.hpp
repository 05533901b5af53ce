#pragma once

#include "ig/geometry.hpp"
#include "ig/transforms.hpp"

namespace ig {

// Finite-difference policy on line space: central stencils of the given
// order in the chart coordinates (y1,y2,a1,a2), with optional Richardson
// extrapolation levels.
struct FDSpec {
  // Defaults frozen from the step-sweep study (docs/convergence_study.csv):
  // 1e-2 sits on the plateau where neither truncation (larger h) nor
  // quadrature-noise amplification (smaller h) dominates the nested stencils.
  double step_y = 1e-2;
  double step_alpha = 1e-2;
  int order = 4;       // 2 or 4
  int richardson = 1;  // extrapolation levels, 0 = none

  FDSpec scaled(double factor) const {
    FDSpec s = *this;
    s.step_y *= factor;
    s.step_alpha *= factor;
    return s;
  }
};

// John operator L = d^2/(da2 dy1) - d^2/(da1 dy2).
double john_L(const GrassmannFunction& u, const LineNH& m, const FDSpec& fd);

// P = k^2 L + a1 d/dy2 - a2 d/dy1.
double op_P(const GrassmannFunction& u, const LineNH& m, const FDSpec& fd);

// Delta_M = k1^2 d^2/dy1^2 + k2^2 d^2/dy2^2 + 2 a1 a2 d^2/(dy1 dy2).
double op_laplaceM(const GrassmannFunction& u, const LineNH& m, const FDSpec& fd);

// Single mixed partial d^2 u / (d var_a d var_b); chart variables indexed
// y1=0, y2=1, a1=2, a2=3 (y variables use step_y, alpha variables step_alpha).
double mixed_partial(const GrassmannFunction& u, const LineNH& m, int var_a,
                     int var_b, const FDSpec& fd);

// The two mixed-derivative terms of L separately, for cancellation-aware
// residual scales: first = d^2/(da2 dy1), second = d^2/(da1 dy2).
std::pair<double, double> john_L_terms(const GrassmannFunction& u,
                                       const LineNH& m, const FDSpec& fd);

// First partials in the four chart coordinates.
std::array<double, 4> chart_gradient(const GrassmannFunction& u,
                                     const LineNH& m, const FDSpec& fd);

enum class LineOp { JohnL, P, LaplaceM };

double apply_op(LineOp op, const GrassmannFunction& u, const LineNH& m,
                const FDSpec& fd);

// Nested application op^n with outer steps doubled per level so that the
// truncation errors of the levels decorrelate. n <= 3.
double op_power(LineOp op, int n, const GrassmannFunction& u, const LineNH& m,
                const FDSpec& fd);

// The operator image as a function on line space (used for nesting and for
// suites that sample it); memoizes when the underlying function does not mind.
GrassmannFunction make_op_function(LineOp op, const GrassmannFunction& u,
                                   const FDSpec& fd, bool memoize = true);

}  // namespace ig
