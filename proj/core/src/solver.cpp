#include "quatode/solver.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "quatode/errors.hpp"
#include "quatode/quadrature.hpp"

namespace quatode {

std::string to_string(Mode mode) {
  switch (mode) {
    case Mode::ivp: return "ivp";
    case Mode::periodic: return "periodic";
    case Mode::homogeneous: return "homogeneous";
  }
  return "unknown";
}

void Problem::validate() const {
  if (n == 0) {
    throw InputError("dimension n must be positive");
  }
  if (a.rows != n || a.cols != n) {
    throw ShapeError("A must be " + std::to_string(n) + "x" + std::to_string(n) + ", got " +
                     std::to_string(a.rows) + "x" + std::to_string(a.cols));
  }
  if (!f.empty() && f.size() != n) {
    throw ShapeError("f must have " + std::to_string(n) + " entries, got " +
                     std::to_string(f.size()));
  }
  if (!(t0 < t_end)) {
    throw InputError("t0 must be smaller than t_end");
  }
  if (!(settings.quad_tol > 0.0)) {
    throw InputError("quad_tol must be positive");
  }
  if (settings.ode_steps < 1) {
    throw InputError("ode_steps must be positive");
  }
  if (settings.samples < 2) {
    throw InputError("samples must be at least 2");
  }
  if (mode == Mode::periodic) {
    if (!(period > 0.0)) {
      throw InputError("periodic mode needs a positive period T");
    }
    if (!x0.empty()) {
      throw InputError("x0 is only meaningful for initial-value problems");
    }
  } else if (x0.size() != n) {
    throw ShapeError("x0 must have " + std::to_string(n) + " entries, got " +
                     std::to_string(x0.size()));
  }
}

std::vector<double> sample_grid(double t0, double t_end, int count) {
  if (count < 1) {
    throw InputError("sample count must be positive");
  }
  if (count == 1) {
    return {t0};
  }
  std::vector<double> times(static_cast<std::size_t>(count));
  const double h = (t_end - t0) / (count - 1);
  for (int s = 0; s < count; ++s) {
    times[static_cast<std::size_t>(s)] = t0 + s * h;
  }
  times.back() = t_end;
  return times;
}

bool is_constant(const ExprMatrix& a, double t_lo, double t_hi) {
  if (t_hi <= t_lo) {
    t_lo -= 1.0;
    t_hi += 1.0;
  }
  // Spread, deliberately irregular points so periodic entries are not
  // sampled at the same phase.
  constexpr std::array<double, 5> fractions{0.0, 0.2113, 0.5, 0.7887, 1.0};
  std::vector<QMatrix> samples;
  for (const double u : fractions) {
    samples.push_back(eval_matrix(a, t_lo + u * (t_hi - t_lo)));
  }
  for (std::size_t p = 0; p < samples.size(); ++p) {
    for (std::size_t q = p + 1; q < samples.size(); ++q) {
      if (max_abs_diff(samples[p], samples[q]) >= 1e-13) {
        return false;
      }
    }
  }
  return true;
}

FundamentalMatrix make_fundamental(const ExprMatrix& a, double t_ref, double t_lo, double t_hi,
                                   const SolverSettings& settings) {
  if (is_constant(a, t_lo, t_hi)) {
    const QMatrix constant = eval_matrix(a, t_ref);
    if (settings.prefer_eigen) {
      try {
        return fundamental_eigen(constant);
      } catch (const DefectiveMatrixError&) {
        // fall through to the exponential
      }
    }
    return fundamental_constant(constant, t_ref);
  }
  return fundamental_numeric(a, t_ref, t_lo, t_hi, settings.ode_steps);
}

namespace {

std::function<QVector(double)> integrand(const FundamentalMatrix& phi, const ExprVector& f) {
  return [&phi, &f](double s) { return phi.inverse_at(s) * std::span<const Quaternion>(eval_vector(f, s)); };
}

}  // namespace

QVector particular_integral(const FundamentalMatrix& phi, const ExprVector& f, double t0,
                            double t, double quad_tol) {
  if (f.empty() || t == t0) {
    return zero_vector(phi.dim());
  }
  const QVector q = integrate(integrand(phi, f), t0, t, {.tol = quad_tol});
  return phi(t) * std::span<const Quaternion>(q);
}

std::vector<QVector> cumulative_integrals(const FundamentalMatrix& phi, const ExprVector& f,
                                          double anchor, const std::vector<double>& times,
                                          double quad_tol) {
  std::vector<QVector> out;
  out.reserve(times.size());
  if (f.empty()) {
    out.assign(times.size(), zero_vector(phi.dim()));
    return out;
  }
  double total = 0.0;
  double prev = anchor;
  for (const double t : times) {
    total += std::abs(t - prev);
    prev = t;
  }
  const auto fn = integrand(phi, f);
  QVector acc = zero_vector(phi.dim());
  prev = anchor;
  for (const double t : times) {
    if (t != prev) {
      const double share = quad_tol * std::abs(t - prev) / total;
      acc = acc + integrate(fn, prev, t, {.tol = share});
    }
    out.push_back(acc);
    prev = t;
  }
  return out;
}

SolutionFunction general_solution(FundamentalMatrix phi, QVector q, ExprVector f, double t0,
                                  double quad_tol) {
  if (q.size() != phi.dim()) {
    throw ShapeError("constant vector has the wrong dimension");
  }
  return [phi = std::move(phi), q = std::move(q), f = std::move(f), t0, quad_tol](double t) {
    QVector coeff = q;
    if (!f.empty() && t != t0) {
      coeff = coeff + integrate(integrand(phi, f), t0, t, {.tol = quad_tol});
    }
    return phi(t) * std::span<const Quaternion>(coeff);
  };
}

SolutionTable solve_ivp(const Problem& p) {
  p.validate();
  if (p.mode == Mode::periodic) {
    throw InputError("solve_ivp called on a periodic problem");
  }
  const ExprVector no_forcing;
  const ExprVector& f = p.mode == Mode::homogeneous ? no_forcing : p.f;

  const FundamentalMatrix phi = make_fundamental(p.a, p.t0, p.t0, p.t_end, p.settings);
  // Anchoring at Φ⁻¹(t0) makes φ(t0) = x0.
  const QVector c = phi.inverse_at(p.t0) * std::span<const Quaternion>(p.x0);

  SolutionTable table;
  table.mode = p.mode;
  table.quad_tol = p.settings.quad_tol;
  table.fundamental = to_string(phi.kind());
  table.times = sample_grid(p.t0, p.t_end, p.settings.samples);
  const auto integrals = cumulative_integrals(phi, f, p.t0, table.times, p.settings.quad_tol);
  table.values.reserve(table.times.size());
  for (std::size_t s = 0; s < table.times.size(); ++s) {
    table.values.push_back(phi(table.times[s]) * std::span<const Quaternion>(c + integrals[s]));
  }
  return table;
}

namespace {

void check_periodicity(const Problem& p, SolutionTable& table) {
  const double period = p.period;
  double worst_a = 0.0;
  double worst_f = 0.0;
  for (int s = 0; s < 8; ++s) {
    const double t = period * (s + 0.37) / 8.0;
    const QMatrix a0 = eval_matrix(p.a, t);
    worst_a = std::max(worst_a, max_abs_diff(eval_matrix(p.a, t + period), a0) /
                                    (1.0 + max_abs(a0)));
    if (!p.f.empty()) {
      const QVector f0 = eval_vector(p.f, t);
      worst_f = std::max(worst_f, max_abs(eval_vector(p.f, t + period) - f0) /
                                      (1.0 + max_abs(f0)));
    }
  }
  if (worst_a > 1e-8) {
    table.warnings.push_back("A(t) does not look T-periodic (relative deviation " +
                             format_real(worst_a) + ")");
  }
  if (worst_f > 1e-8) {
    table.warnings.push_back("f(t) does not look T-periodic (relative deviation " +
                             format_real(worst_f) + ")");
  }
}

}  // namespace

SolutionTable solve_periodic(const Problem& p) {
  p.validate();
  if (p.mode != Mode::periodic) {
    throw InputError("solve_periodic called on a non-periodic problem");
  }
  const double period = p.period;
  const double lo = std::min(0.0, p.t0);
  const double hi = std::max(period, p.t_end);
  const FundamentalMatrix phi = make_fundamental(p.a, 0.0, lo, hi, p.settings);

  SolutionTable table;
  table.mode = p.mode;
  table.quad_tol = p.settings.quad_tol;
  table.fundamental = to_string(phi.kind());
  check_periodicity(p, table);

  const QMatrix phi0 = phi(0.0);
  const QMatrix phi_t = phi(period);
  const QVector over_period =
      cumulative_integrals(phi, p.f, 0.0, {period}, p.settings.quad_tol).front();
  QMatrix jump_inverse;
  try {
    jump_inverse = solver_inverse(phi0 - phi_t);
  } catch (const SingularMatrixError& e) {
    throw SingularMatrixError(
        std::string("Phi(0) - Phi(T) is singular, no unique T-periodic solution: ") + e.what());
  }
  const QVector q =
      jump_inverse * std::span<const Quaternion>(phi_t * std::span<const Quaternion>(over_period));

  const QVector start = phi0 * std::span<const Quaternion>(q);
  const QVector end = phi_t * std::span<const Quaternion>(q + over_period);
  table.periodicity_defect = max_abs(end - start);

  table.times = sample_grid(p.t0, p.t_end, p.settings.samples);
  const auto integrals = cumulative_integrals(phi, p.f, 0.0, table.times, p.settings.quad_tol);
  table.values.reserve(table.times.size());
  for (std::size_t s = 0; s < table.times.size(); ++s) {
    table.values.push_back(phi(table.times[s]) * std::span<const Quaternion>(q + integrals[s]));
  }
  return table;
}

SolutionTable solve(const Problem& p) {
  return p.mode == Mode::periodic ? solve_periodic(p) : solve_ivp(p);
}

}  // namespace quatode
