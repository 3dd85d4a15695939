#include <cmath>

#include <doctest.h>

#include "oracles.hpp"
#include "quatode/errors.hpp"
#include "quatode/verify.hpp"

using namespace quatode;

namespace {

// Samples a closed form into a solution table.
SolutionTable tabulate(const ExprVector& x, int samples, double t0 = 0.0, double t1 = 1.0) {
  SolutionTable sol;
  sol.times = sample_grid(t0, t1, samples);
  for (const double t : sol.times) {
    sol.values.push_back(eval_vector(x, t));
  }
  return sol;
}

const ExprMatrix kDiagonalJk = parse_matrix({{"j", "0"}, {"0", "k"}});
const ExprVector kDiagonalJkForcing = parse_vector({"(t^2+1)*i", "t*j"});
const ExprVector kDiagonalJkSolution = parse_vector(
    {"2*t*i + exp(j*t)*j - (t^2 + exp(j*t) - 1)*k", "-t*i + (1 - exp(k*t))*j + exp(k*t)*k"});

}  // namespace

TEST_CASE("exact solution has a second-order residual") {
  SolutionTable coarse = tabulate(kDiagonalJkSolution, 101);
  SolutionTable fine = tabulate(kDiagonalJkSolution, 201);
  const double r1 = verify::residual_max(coarse, kDiagonalJk, kDiagonalJkForcing);
  const double r2 = verify::residual_max(fine, kDiagonalJk, kDiagonalJkForcing);
  CHECK(r1 <= 1e-4);
  CHECK(r1 / r2 == doctest::Approx(4.0).epsilon(0.05));
  CHECK(coarse.residuals.size() == 101);
  CHECK(coarse.residuals.front() > 0.0);
}

TEST_CASE("residual detects a wrong solution") {
  const ExprVector wrong = parse_vector({"t*i", "j"});
  SolutionTable sol = tabulate(wrong, 101);
  CHECK(verify::residual_max(sol, kDiagonalJk, kDiagonalJkForcing) > 0.5);
}

TEST_CASE("quadratic solutions have zero interior residual") {
  // x = t^2 solves x' = 2t with A = 0; the three-point rule is exact.
  SolutionTable sol = tabulate(parse_vector({"t^2*k"}), 11);
  CHECK(verify::residual_max(sol, parse_matrix({{"0"}}), parse_vector({"2*t*k"})) <= 1e-12);
}

TEST_CASE("pointwise residual uses a fourth-order stencil") {
  const ExprVector x = kDiagonalJkSolution;
  const SolutionFunction f = [&](double t) { return eval_vector(x, t); };
  CHECK(verify::residual_at(f, kDiagonalJk, kDiagonalJkForcing, 0.5) <= 1e-10);
}

TEST_CASE("comparisons") {
  SolutionTable a = tabulate(parse_vector({"t*i"}), 11);
  SolutionTable b = tabulate(parse_vector({"t*i + 0.25*j"}), 11);
  CHECK(verify::compare(a, b) == doctest::Approx(0.25));
  CHECK(verify::compare(a, parse_vector({"t*i"})) == 0.0);
  SolutionTable c = tabulate(parse_vector({"t*i"}), 12);
  CHECK_THROWS_AS(verify::compare(a, c), InputError);
}

TEST_CASE("too few samples") {
  SolutionTable sol = tabulate(parse_vector({"t"}), 4);
  CHECK_THROWS_AS(verify::residual_max(sol, parse_matrix({{"0"}}), {}), InputError);
}
