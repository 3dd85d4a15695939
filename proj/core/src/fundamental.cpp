#include "quatode/fundamental.hpp"

#include <algorithm>
#include <cmath>

#include "quatode/complex_adjoint.hpp"
#include "quatode/determinant.hpp"
#include "quatode/eigen.hpp"
#include "quatode/errors.hpp"

namespace quatode {

std::string to_string(FundamentalKind kind) {
  switch (kind) {
    case FundamentalKind::exponential: return "exponential";
    case FundamentalKind::eigen: return "eigen";
    case FundamentalKind::numeric: return "numeric";
  }
  return "unknown";
}

FundamentalMatrix::FundamentalMatrix(std::size_t dim, FundamentalKind kind, double t_ref,
                                     std::function<QMatrix(double)> evaluator)
    : dim_(dim), kind_(kind), t_ref_(t_ref), evaluator_(std::move(evaluator)) {}

QMatrix FundamentalMatrix::inverse_at(double t) const {
  return solver_inverse((*this)(t));
}

QMatrix solver_inverse(const QMatrix& a) {
  return a.rows() <= kChenInverseMaxDim ? inverse(a) : inverse_via_adjoint(a);
}

double independence_measure(const QMatrix& a) {
  return a.rows() <= kChenInverseMaxDim ? ddet(a) : adjoint_determinant(a);
}

FundamentalMatrix fundamental_constant(const QMatrix& a, double t_ref) {
  if (!a.is_square() || a.rows() == 0) {
    throw ShapeError("fundamental matrix needs a non-empty square coefficient matrix");
  }
  return FundamentalMatrix(a.rows(), FundamentalKind::exponential, t_ref,
                           [a, t_ref](double t) { return expm(a, t - t_ref); });
}

FundamentalMatrix fundamental_eigen(const QMatrix& a) {
  const auto pairs = right_eigenpairs(a);
  std::vector<QVector> columns;
  for (const auto& p : pairs) {
    columns.push_back(p.vector);
  }
  const QMatrix v = QMatrix::from_columns(columns);
  if (std::abs(independence_measure(v)) < singular_tolerance(v)) {
    throw DefectiveMatrixError("right eigenvectors are dependent; use the matrix exponential");
  }
  return FundamentalMatrix(a.rows(), FundamentalKind::eigen, 0.0, [pairs](double t) {
    QMatrix phi(pairs.size(), pairs.size());
    for (std::size_t c = 0; c < pairs.size(); ++c) {
      const Quaternion growth = qexp(pairs[c].value * t);
      for (std::size_t r = 0; r < pairs.size(); ++r) {
        phi(r, c) = pairs[c].vector[r] * growth;
      }
    }
    return phi;
  });
}

namespace {

// Grid of Φ and Φ' = AΦ on increasing times, interpolated by cubic Hermite.
struct DenseSolution {
  std::vector<double> times;
  std::vector<QMatrix> values;
  std::vector<QMatrix> slopes;

  QMatrix at(double t) const {
    const double lo = times.front();
    const double hi = times.back();
    // Allow a few ulps of slack at the window edges.
    const double slack = 1e-12 * std::max({1.0, std::abs(lo), std::abs(hi)});
    if (t < lo - slack || t > hi + slack) {
      throw InputError("fundamental matrix requested at t = " + format_real(t) +
                       " outside its integration window [" + format_real(lo) + ", " +
                       format_real(hi) + "]");
    }
    t = std::clamp(t, lo, hi);
    auto it = std::upper_bound(times.begin(), times.end(), t);
    std::size_t k = it == times.begin() ? 0 : static_cast<std::size_t>(it - times.begin()) - 1;
    if (k + 1 >= times.size()) {
      if (times.size() == 1) {
        return values.front();
      }
      k = times.size() - 2;
    }
    const double h = times[k + 1] - times[k];
    const double s = (t - times[k]) / h;
    if (s == 0.0) {
      return values[k];
    }
    const double s2 = s * s;
    const double s3 = s2 * s;
    const double h00 = 2 * s3 - 3 * s2 + 1;
    const double h10 = s3 - 2 * s2 + s;
    const double h01 = -2 * s3 + 3 * s2;
    const double h11 = s3 - s2;
    return h00 * values[k] + (h10 * h) * slopes[k] + h01 * values[k + 1] +
           (h11 * h) * slopes[k + 1];
  }
};

QMatrix rk4_step(const ExprMatrix& a, double t, const QMatrix& phi, double h) {
  const QMatrix k1 = eval_matrix(a, t) * phi;
  const QMatrix k2 = eval_matrix(a, t + 0.5 * h) * (phi + (0.5 * h) * k1);
  const QMatrix k3 = eval_matrix(a, t + 0.5 * h) * (phi + (0.5 * h) * k2);
  const QMatrix k4 = eval_matrix(a, t + h) * (phi + h * k3);
  return phi + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

// Integrates from t_ref towards `target` in `steps` equal steps; returns the
// visited times (excluding t_ref) with their Φ values.
void march(const ExprMatrix& a, double t_ref, double target, int steps,
           std::vector<double>& times, std::vector<QMatrix>& values) {
  const double h = (target - t_ref) / steps;
  QMatrix phi = QMatrix::identity(a.rows);
  for (int s = 1; s <= steps; ++s) {
    const double t = t_ref + (s - 1) * h;
    phi = rk4_step(a, t, phi, h);
    times.push_back(s == steps ? target : t_ref + s * h);
    values.push_back(phi);
  }
}

}  // namespace

FundamentalMatrix fundamental_numeric(const ExprMatrix& a, double t_ref, double t_begin,
                                      double t_end, int steps) {
  if (a.rows != a.cols || a.rows == 0) {
    throw ShapeError("fundamental matrix needs a non-empty square coefficient matrix");
  }
  if (steps < 1) {
    throw InputError("ode_steps must be positive");
  }
  if (!(t_begin <= t_ref && t_ref <= t_end)) {
    throw InputError("integration window must contain the anchor time");
  }
  const double span = t_end - t_begin;
  int back_steps = 0;
  int fwd_steps = 0;
  if (span > 0.0) {
    back_steps = t_ref > t_begin
                     ? std::max(1, static_cast<int>(std::lround(steps * (t_ref - t_begin) / span)))
                     : 0;
    fwd_steps = t_end > t_ref ? std::max(1, steps - back_steps) : 0;
  }

  auto dense = std::make_shared<DenseSolution>();
  std::vector<double> back_t;
  std::vector<QMatrix> back_v;
  if (back_steps > 0) {
    march(a, t_ref, t_begin, back_steps, back_t, back_v);
  }
  std::reverse(back_t.begin(), back_t.end());
  std::reverse(back_v.begin(), back_v.end());
  dense->times = std::move(back_t);
  dense->values = std::move(back_v);
  dense->times.push_back(t_ref);
  dense->values.push_back(QMatrix::identity(a.rows));
  if (fwd_steps > 0) {
    march(a, t_ref, t_end, fwd_steps, dense->times, dense->values);
  }

  dense->slopes.reserve(dense->times.size());
  for (std::size_t g = 0; g < dense->times.size(); ++g) {
    const QMatrix& phi = dense->values[g];
    if (std::abs(independence_measure(phi)) < singular_tolerance(phi)) {
      throw NumericalError("numeric fundamental matrix became singular at t = " +
                           format_real(dense->times[g]) + "; increase ode_steps");
    }
    dense->slopes.push_back(eval_matrix(a, dense->times[g]) * phi);
  }

  return FundamentalMatrix(a.rows, FundamentalKind::numeric, t_ref,
                           [dense](double t) { return dense->at(t); });
}

}  // namespace quatode
