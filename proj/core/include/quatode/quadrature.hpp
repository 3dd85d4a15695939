#pragma once

#include <functional>

#include "quatode/qmatrix.hpp"

namespace quatode {

struct QuadratureOptions {
  double tol = 1e-10;
  int max_depth = 30;
  int min_depth = 2;  // forced bisections before the error test is trusted
};

/// Adaptive Simpson quadrature of a vector-valued integrand, applied to all
/// 4n real components at once. A panel is accepted when every component's
/// Richardson estimate |S₂ - S₁|/15 is within the panel's share of `tol`;
/// each node is evaluated once and reused by the child panels.
///
/// Throws QuadratureError when a panel is still unresolved at max_depth.
/// b < a is allowed and gives the negated integral.
QVector integrate(const std::function<QVector(double)>& f, double a, double b,
                  const QuadratureOptions& opts = {});

}  // namespace quatode
