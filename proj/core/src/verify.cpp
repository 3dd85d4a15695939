#include "quatode/verify.hpp"

#include <algorithm>

#include "quatode/errors.hpp"

namespace quatode::verify {

namespace {

QVector rhs(const ExprMatrix& a, const ExprVector& f, double t, const QVector& x) {
  QVector out = eval_matrix(a, t) * std::span<const Quaternion>(x);
  if (!f.empty()) {
    out = out + eval_vector(f, t);
  }
  return out;
}

// Derivative at t[m] of the quadratic through (t[p], x[p]) for p = a, b, c.
QVector three_point_derivative(const std::vector<double>& t, const std::vector<QVector>& x,
                               std::size_t a, std::size_t b, std::size_t c, std::size_t m) {
  const double tm = t[m];
  const double wa = ((tm - t[b]) + (tm - t[c])) / ((t[a] - t[b]) * (t[a] - t[c]));
  const double wb = ((tm - t[a]) + (tm - t[c])) / ((t[b] - t[a]) * (t[b] - t[c]));
  const double wc = ((tm - t[a]) + (tm - t[b])) / ((t[c] - t[a]) * (t[c] - t[b]));
  return wa * x[a] + (wb * x[b] + (wc * x[c]));
}

}  // namespace

double residual_max(SolutionTable& sol, const ExprMatrix& a, const ExprVector& f) {
  const std::size_t count = sol.times.size();
  if (count < 5) {
    throw InputError("residual check needs at least 5 samples, got " + std::to_string(count));
  }
  if (sol.values.size() != count) {
    throw ShapeError("solution table has mismatched times and values");
  }
  sol.residuals.assign(count, 0.0);
  double worst = 0.0;
  for (std::size_t m = 0; m < count; ++m) {
    QVector deriv;
    if (m == 0) {
      deriv = three_point_derivative(sol.times, sol.values, 0, 1, 2, 0);
    } else if (m + 1 == count) {
      deriv = three_point_derivative(sol.times, sol.values, count - 3, count - 2, count - 1, m);
    } else {
      deriv = three_point_derivative(sol.times, sol.values, m - 1, m, m + 1, m);
    }
    const double r = max_abs(deriv - rhs(a, f, sol.times[m], sol.values[m]));
    sol.residuals[m] = r;
    if (m != 0 && m + 1 != count) {
      worst = std::max(worst, r);
    }
  }
  return worst;
}

double residual_at(const SolutionFunction& x, const ExprMatrix& a, const ExprVector& f, double t,
                   double h) {
  const QVector xm2 = x(t - 2 * h);
  const QVector xm1 = x(t - h);
  const QVector xp1 = x(t + h);
  const QVector xp2 = x(t + 2 * h);
  QVector deriv = xm2 - xp2;
  deriv = deriv + 8.0 * (xp1 - xm1);
  deriv = (1.0 / (12.0 * h)) * std::move(deriv);
  return max_abs(deriv - rhs(a, f, t, x(t)));
}

double compare(const SolutionTable& sol, const ExprVector& reference) {
  double worst = 0.0;
  for (std::size_t s = 0; s < sol.times.size(); ++s) {
    const QVector ref = eval_vector(reference, sol.times[s]);
    worst = std::max(worst, max_abs(sol.values[s] - ref));
  }
  return worst;
}

double compare(const SolutionTable& sol, const SolutionTable& reference) {
  if (sol.times != reference.times) {
    throw InputError("tables are sampled at different times");
  }
  double worst = 0.0;
  for (std::size_t s = 0; s < sol.times.size(); ++s) {
    worst = std::max(worst, max_abs(sol.values[s] - reference.values[s]));
  }
  return worst;
}

}  // namespace quatode::verify
