#pragma once

#include "quatode/expr.hpp"
#include "quatode/solver.hpp"

// All norms here are the ∞-norm over the 4n real components of a vector.

namespace quatode::verify {

/// Finite-difference residual ‖φ'(t) - A(t)φ(t) - f(t)‖ at every sample,
/// written into sol.residuals. Interior samples use the three-point central
/// formula, the two endpoints the one-sided second-order formula. Returns the maximum over interior samples.
/// Needs at least 5 samples.
double residual_max(SolutionTable& sol, const ExprMatrix& a, const ExprVector& f);

/// Pointwise residual of a solution callable using the fourth-order central
/// stencil with step h.
double residual_at(const SolutionFunction& x, const ExprMatrix& a, const ExprVector& f, double t,
                   double h = 1e-3);

/// sup over samples of ‖φ(t_s) - reference(t_s)‖.
double compare(const SolutionTable& sol, const ExprVector& reference);

/// Same against another table on identical times (e.g. re-read output).
double compare(const SolutionTable& sol, const SolutionTable& reference);

}  // namespace quatode::verify
