#include <cmath>
#include <functional>
#include <numbers>
#include <string>

#include <doctest.h>

#include "oracles.hpp"
#include "quatode/errors.hpp"
#include "quatode/expr.hpp"

using namespace quatode;

namespace {

const Quaternion I = Quaternion::unit_i();
const Quaternion J = Quaternion::unit_j();
const Quaternion K = Quaternion::unit_k();

Quaternion ev(const std::string& src, double t = 0.0) { return eval(parse(src), t); }

std::size_t parse_error_position(const std::string& src) {
  try {
    parse(src);
  } catch (const ParseError& e) {
    return e.position();
  }
  FAIL("expected a parse error for '" << src << "'");
  return 0;
}

// Random trees over the whole grammar for round-trip checks.
Expr random_expr(oracle::Rng& rng, int depth) {
  const int pick = static_cast<int>(rng.uniform(0.0, depth <= 0 ? 5.0 : 12.0));
  switch (pick) {
    case 0:
      return Expr::number(std::round(rng.uniform(-50.0, 50.0)) / 8.0);
    case 1:
      return Expr::unit('i');
    case 2:
      return Expr::unit('j');
    case 3:
      return Expr::unit('k');
    case 4:
      return Expr::variable();
    case 5:
      return Expr::negate(random_expr(rng, depth - 1));
    case 6:
      return Expr::binary(Expr::Kind::add, random_expr(rng, depth - 1), random_expr(rng, depth - 1));
    case 7:
      return Expr::binary(Expr::Kind::sub, random_expr(rng, depth - 1), random_expr(rng, depth - 1));
    case 8:
      return Expr::binary(Expr::Kind::mul, random_expr(rng, depth - 1), random_expr(rng, depth - 1));
    case 9:
      return Expr::power(random_expr(rng, depth - 1), static_cast<unsigned>(rng.uniform(0.0, 4.0)));
    case 10:
      return Expr::call(Expr::Function::exp, random_expr(rng, depth - 1));
    default:
      return Expr::call(rng.uniform(0.0, 1.0) < 0.5 ? Expr::Function::sin : Expr::Function::cos,
                        Expr::variable());
  }
}

}  // namespace

TEST_CASE("forcing term parses with the expected shape") {
  const Expr e = parse("(t^2+1)*i");
  REQUIRE(e.kind() == Expr::Kind::mul);
  CHECK(e.rhs().kind() == Expr::Kind::unit_i);
  REQUIRE(e.lhs().kind() == Expr::Kind::add);
  CHECK(e.lhs().lhs().kind() == Expr::Kind::pow);
  CHECK(e.lhs().lhs().exponent() == 2);
  CHECK(e.lhs().lhs().lhs().kind() == Expr::Kind::variable);
  CHECK(e.lhs().rhs().kind() == Expr::Kind::number);
  CHECK(e.lhs().rhs().value() == 1.0);
  CHECK(oracle::max_diff(eval(e, 2.0), 5.0 * I) == 0.0);
}

TEST_CASE("function application binds before the outer product") {
  const Expr e = parse("exp(j*t)*j");
  REQUIRE(e.kind() == Expr::Kind::mul);
  CHECK(e.lhs().kind() == Expr::Kind::call);
  CHECK(e.lhs().function() == Expr::Function::exp);
  CHECK(e.rhs().kind() == Expr::Kind::unit_j);
}

TEST_CASE("evaluation") {
  constexpr double pi = std::numbers::pi;
  CHECK(oracle::max_diff(ev("exp(j*t)", pi), Quaternion(-1.0)) <= 1e-15);
  CHECK(oracle::max_diff(ev("2*t*i + exp(j*t)*j - (t^2 + exp(j*t) - 1)*k", 0.0), J) <= 1e-15);
  CHECK(ev("i*j") == K);
  CHECK(ev("j*i") == -K);
  CHECK(oracle::max_diff(ev("k/j"), I) <= 1e-15);
  CHECK(ev("-2^2") == Quaternion(-4.0));
  CHECK(ev("2^3^2") == Quaternion(64.0));
  CHECK(ev("1-2-3") == Quaternion(-4.0));
  CHECK(ev("8/4/2") == Quaternion(1.0));
  CHECK(ev("t^0", 3.0) == Quaternion(1.0));
  CHECK(ev("1.5e2") == Quaternion(150.0));
  CHECK(ev(" 2 * ( t + i ) ", 1.0) == Quaternion(2.0, 2.0, 0.0, 0.0));
  CHECK(ev("sin(t)", 0.5).w == doctest::Approx(std::sin(0.5)));
  CHECK(ev("cos(t)", 0.5).w == doctest::Approx(std::cos(0.5)));
}

TEST_CASE("products keep written order") {
  oracle::Rng rng(61);
  for (int trial = 0; trial < 20; ++trial) {
    const double t = rng.uniform(-2.0, 2.0);
    CHECK(oracle::max_diff(ev("exp(i*t)*exp(j*t)", t), qexp(I * t) * qexp(J * t)) <= 1e-15);
    CHECK(oracle::max_diff(ev("exp(i*t)*exp(j*t)", t), ev("exp(j*t)*exp(i*t)", t)) >
          (std::abs(t) > 0.1 ? 1e-6 : -1.0));
  }
}

TEST_CASE("syntax errors carry positions") {
  CHECK(parse_error_position("2*") == 2);
  CHECK(parse_error_position("(1+t") == 4);
  CHECK(parse_error_position("1+)") == 2);
  CHECK(parse_error_position("foo(t)") == 0);
  CHECK(parse_error_position("t^-1") == 2);
  CHECK(parse_error_position("t^1.5") == 2);
  CHECK(parse_error_position("2i") == 1);
  CHECK(parse_error_position("1 $") == 2);
  CHECK_THROWS_AS(parse(""), ParseError);
  CHECK_THROWS_AS(parse("t^100000"), ParseError);
  CHECK_THROWS_WITH_AS(parse("2i"), doctest::Contains("implicit multiplication"), ParseError);
}

TEST_CASE("evaluation errors") {
  CHECK_THROWS_AS(ev("sin(i)"), EvalError);
  CHECK_THROWS_AS(ev("cos(t*j)", 1.0), EvalError);
  CHECK_NOTHROW(ev("cos(t*j)", 0.0));
  CHECK_THROWS_AS(ev("1/(t-1)", 1.0), DomainError);
}

TEST_CASE("render round trip") {
  oracle::Rng rng(62);
  for (int trial = 0; trial < 300; ++trial) {
    const Expr e = random_expr(rng, 4);
    const std::string text = render(e);
    const Expr back = parse(text);
    CHECK(render(back) == text);
    for (const double t : {-0.7, 0.3, 1.1}) {
      Quaternion a;
      Quaternion b;
      bool threw_a = false;
      bool threw_b = false;
      try {
        a = eval(e, t);
      } catch (const Error&) {
        threw_a = true;
      }
      try {
        b = eval(back, t);
      } catch (const Error&) {
        threw_b = true;
      }
      CHECK(threw_a == threw_b);
      if (!threw_a && is_finite(a)) {
        CHECK(oracle::max_diff(a, b) <= 1e-12 * std::max(1.0, norm(a)));
      }
    }
  }
}

TEST_CASE("t dependence") {
  CHECK(parse("t*i").depends_on_t());
  CHECK_FALSE(parse("exp(j)*2").depends_on_t());
  CHECK(parse_matrix({{"1", "t"}, {"0", "0"}}).depends_on_t());
  CHECK_FALSE(parse_matrix({{"i", "0"}, {"1", "1+i"}}).depends_on_t());
}

TEST_CASE("matrices and vectors") {
  const ExprMatrix m = parse_matrix({{"j", "0"}, {"0", "k"}});
  CHECK(eval_matrix(m, 0.4) == QMatrix{{J, 0.0}, {0.0, K}});
  const ExprMatrix a = parse_matrix({{"i", "0"}, {"1", "1+i"}});
  CHECK(eval_matrix(a, 7.0) == QMatrix{{I, 0.0}, {1.0, 1.0 + I}});
  CHECK(eval_vector(parse_vector({"i", "t*k"}), 2.0) == QVector{I, 2.0 * K});
  CHECK_THROWS_AS(parse_matrix({{"1", "2"}, {"3"}}), ShapeError);
  CHECK_THROWS_WITH_AS(parse_matrix({{"1", "2"}, {"3", "4*"}}), doctest::Contains("[1][1]"),
                       ParseError);
  CHECK_THROWS_WITH_AS(eval_vector(parse_vector({"1", "sin(i)"}), 0.0), doctest::Contains("[1]"),
                       EvalError);
}

TEST_CASE("quaternion literals") {
  CHECK(parse_quaternion("1-2*j") == Quaternion(1.0, 0.0, -2.0, 0.0));
  CHECK_THROWS_AS(parse_quaternion("t"), InputError);
}
