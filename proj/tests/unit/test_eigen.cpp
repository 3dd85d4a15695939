#include <doctest.h>

#include "oracles.hpp"
#include "quatode/determinant.hpp"
#include "quatode/eigen.hpp"
#include "quatode/errors.hpp"

using namespace quatode;

namespace {

const Quaternion I = Quaternion::unit_i();
const Quaternion J = Quaternion::unit_j();
const Quaternion K = Quaternion::unit_k();

double residual(const QMatrix& a, const RightEigenpair& p) {
  const QVector av = a * std::span<const Quaternion>(p.vector);
  const QVector vl = std::span<const Quaternion>(p.vector) * p.value;
  return oracle::max_diff(av, vl);
}

QMatrix vectors(const std::vector<RightEigenpair>& pairs) {
  std::vector<QVector> cols;
  for (const auto& p : pairs) {
    cols.push_back(p.vector);
  }
  return QMatrix::from_columns(cols);
}

}  // namespace

TEST_CASE("lower triangular example") {
  const QMatrix a{{I, 0.0}, {1.0, 1.0 + I}};
  const auto pairs = right_eigenpairs(a);
  REQUIRE(pairs.size() == 2);
  CHECK(oracle::max_diff(pairs[0].value, I) <= 1e-12);
  CHECK(oracle::max_diff(pairs[1].value, 1.0 + I) <= 1e-12);
  for (const auto& p : pairs) {
    CHECK(residual(a, p) <= 1e-12);
    CHECK(norm(p.vector) == doctest::Approx(1.0));
  }
  CHECK(ddet(vectors(pairs)) > 1e-6);
}

TEST_CASE("similar eigenvalues share a complex representative") {
  const QMatrix a{{J, 0.0}, {0.0, K}};
  const auto pairs = right_eigenpairs(a);
  REQUIRE(pairs.size() == 2);
  for (const auto& p : pairs) {
    CHECK(oracle::max_diff(p.value, I) <= 1e-12);
    CHECK(residual(a, p) <= 1e-12);
  }
  CHECK(ddet(vectors(pairs)) == doctest::Approx(1.0));
}

TEST_CASE("real symmetric matrix") {
  const QMatrix a{{2.0, 1.0}, {1.0, 2.0}};
  const auto pairs = right_eigenpairs(a);
  REQUIRE(pairs.size() == 2);
  CHECK(oracle::max_diff(pairs[0].value, 1.0) <= 1e-12);
  CHECK(oracle::max_diff(pairs[1].value, 3.0) <= 1e-12);
}

TEST_CASE("random matrices give independent eigenpairs") {
  oracle::Rng rng(51);
  for (std::size_t n = 1; n <= 4; ++n) {
    for (int trial = 0; trial < 10; ++trial) {
      const QMatrix a = rng.matrix(n, n);
      const auto pairs = right_eigenpairs(a);
      REQUIRE(pairs.size() == n);
      for (std::size_t m = 0; m < n; ++m) {
        CHECK(residual(a, pairs[m]) <= 1e-9);
        CHECK(pairs[m].value.x >= 0.0);
        CHECK(pairs[m].value.y == 0.0);
        CHECK(pairs[m].value.z == 0.0);
        if (m > 0) {
          const auto& p = pairs[m - 1].value;
          const auto& q = pairs[m].value;
          CHECK((p.w < q.w || (p.w == q.w && p.x <= q.x)));
        }
      }
      CHECK(ddet(vectors(pairs)) > 1e-10);
    }
  }
}

TEST_CASE("defective matrices are reported") {
  CHECK_THROWS_AS(right_eigenpairs(QMatrix{{1.0, 1.0}, {0.0, 1.0}}), DefectiveMatrixError);
  CHECK_THROWS_AS(right_eigenpairs(QMatrix(2, 3)), ShapeError);
}
