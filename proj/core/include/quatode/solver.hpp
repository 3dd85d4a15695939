#pragma once

/**
 * @file solver.hpp
 * @brief Variation of constants for x' = A(t)x + f(t) over ℍⁿ.
 *
 * Every solution is φ(t) = Φ(t)q + Φ(t)∫_{t0}^{t} Φ⁻¹(s)f(s) ds for a
 * constant quaternion vector q. Initial values fix q = Φ⁻¹(t0)x0; the
 * T-periodic problem fixes q = (Φ(0) - Φ(T))⁻¹ Φ(T) ∫_0^T Φ⁻¹ f with the
 * integral anchored at 0.
 */

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "quatode/expr.hpp"
#include "quatode/fundamental.hpp"
#include "quatode/qmatrix.hpp"

namespace quatode {

enum class Mode { ivp, periodic, homogeneous };

std::string to_string(Mode mode);

struct SolverSettings {
  double quad_tol = 1e-10;
  int ode_steps = 4096;
  int samples = 101;
  /// For constant A, build Φ from right eigenpairs when they are clean
  /// instead of from the matrix exponential.
  bool prefer_eigen = false;
};

struct Problem {
  std::size_t n = 0;
  ExprMatrix a;
  ExprVector f;  // empty means f ≡ 0
  Mode mode = Mode::ivp;
  QVector x0;            // ivp and homogeneous
  double t0 = 0.0;
  double t_end = 1.0;
  double period = 0.0;   // periodic
  SolverSettings settings;

  /// Throws InputError describing the first violated invariant.
  void validate() const;
};

struct SolutionTable {
  std::vector<double> times;
  std::vector<QVector> values;
  std::vector<double> residuals;  // filled by verify::residual_max

  Mode mode = Mode::ivp;
  double quad_tol = 0.0;
  std::string fundamental;        // which construction produced Φ
  std::optional<double> periodicity_defect;  // ‖x(0) - x(T)‖∞, periodic mode
  std::vector<std::string> warnings;
};

/// `count` equispaced points including both endpoints.
std::vector<double> sample_grid(double t0, double t_end, int count);

/// True when every entry of A is the same at 5 spread points of [t_lo, t_hi]
/// to within 1e-13.
bool is_constant(const ExprMatrix& a, double t_lo, double t_hi);

/// Picks the construction for Φ: exponential (or eigen, if requested and
/// clean) for constant A, numeric RK4 over [t_lo, t_hi] otherwise.
FundamentalMatrix make_fundamental(const ExprMatrix& a, double t_ref, double t_lo, double t_hi,
                                   const SolverSettings& settings);

/// Φ(t)·∫_{t0}^{t} Φ⁻¹(s)f(s) ds. An empty f gives the zero vector.
QVector particular_integral(const FundamentalMatrix& phi, const ExprVector& f, double t0,
                            double t, double quad_tol);

/// ∫_{anchor}^{times[s]} Φ⁻¹ f for every s, integrating panel by panel
/// between consecutive times. The tolerance is shared out in proportion to
/// panel length.
std::vector<QVector> cumulative_integrals(const FundamentalMatrix& phi, const ExprVector& f,
                                          double anchor, const std::vector<double>& times,
                                          double quad_tol);

using SolutionFunction = std::function<QVector(double)>;

/// t ↦ Φ(t)q + Φ(t)∫_{t0}^{t} Φ⁻¹ f.
SolutionFunction general_solution(FundamentalMatrix phi, QVector q, ExprVector f, double t0,
                                  double quad_tol);

SolutionTable solve_ivp(const Problem& p);
SolutionTable solve_periodic(const Problem& p);

/// Dispatches on p.mode.
SolutionTable solve(const Problem& p);

}  // namespace quatode
