#include <doctest.h>

#include "oracles.hpp"
#include "quatode/errors.hpp"
#include "quatode/qmatrix.hpp"

using namespace quatode;

namespace {

const Quaternion I = Quaternion::unit_i();
const Quaternion J = Quaternion::unit_j();
const Quaternion K = Quaternion::unit_k();

}  // namespace

TEST_CASE("construction and access") {
  const QMatrix a{{1.0, I}, {J, K}};
  CHECK(a.rows() == 2);
  CHECK(a.cols() == 2);
  CHECK(a(0, 1) == I);
  CHECK(a.row(1) == QVector{J, K});
  CHECK(a.column(0) == QVector{1.0, J});
  CHECK(QMatrix::identity(3)(2, 2) == Quaternion(1.0));
  CHECK(QMatrix::identity(3)(1, 2) == Quaternion());
  CHECK(QMatrix::from_columns(std::vector<QVector>{{1.0, J}, {I, K}}) == a);
  CHECK_THROWS_AS((QMatrix{{1.0, 2.0}, {3.0}}), ShapeError);
  CHECK_THROWS_AS(QMatrix(2, 2, {1.0}), ShapeError);
}

TEST_CASE("products keep entry order") {
  const QMatrix a{{I, 0.0}, {0.0, J}};
  const QMatrix b{{J, 0.0}, {0.0, I}};
  CHECK((a * b) == QMatrix{{K, 0.0}, {0.0, -K}});
  CHECK((b * a) == QMatrix{{-K, 0.0}, {0.0, K}});
  CHECK_THROWS_AS(QMatrix(2, 3) * QMatrix(2, 3), ShapeError);

  oracle::Rng rng(21);
  for (int n = 0; n < 50; ++n) {
    const QMatrix p = rng.matrix(3, 2);
    const QMatrix q = rng.matrix(2, 4);
    CHECK(oracle::max_diff(p * q, oracle::matmul(p, q)) <= 1e-14);
  }
}

TEST_CASE("matrix-vector product and vector helpers") {
  const QMatrix a{{1.0, I}, {J, K}};
  const QVector v{K, 1.0};
  const QVector av = a * std::span<const Quaternion>(v);
  CHECK(av == QVector{K + I, J * K + K});
  CHECK((v - v) == zero_vector(2));
  CHECK((std::span<const Quaternion>(v) * J) == QVector{K * J, J});
  CHECK(max_abs(QVector{Quaternion(0, -3, 1, 0), 2.0}) == 3.0);
  CHECK(sup_norm(QVector{Quaternion(0, 3, 4, 0), 2.0}) == doctest::Approx(5.0));
  CHECK(norm(QVector{Quaternion(0, 3, 4, 0), 0.0}) == doctest::Approx(5.0));
}

TEST_CASE("conjugate transpose") {
  const QMatrix b{{J, -I}, {1.0, K}};
  CHECK(conj_transpose(b) == QMatrix{{-J, 1.0}, {I, -K}});

  oracle::Rng rng(22);
  for (int n = 0; n < 100; ++n) {
    const QMatrix p = rng.matrix(3, 3);
    const QMatrix q = rng.matrix(3, 3);
    CHECK(oracle::max_diff(conj_transpose(p * q), conj_transpose(q) * conj_transpose(p)) <=
          1e-14);
    CHECK(conj_transpose(conj_transpose(p)) == p);
  }
}

TEST_CASE("norms") {
  const QMatrix a{{Quaternion(1, 1, 1, 1), 0.0}, {0.0, Quaternion(0, 0, -3, 0)}};
  CHECK(frobenius_norm(a) == doctest::Approx(std::sqrt(13.0)));
  CHECK(max_abs(a) == 3.0);
  CHECK(max_abs_diff(a, QMatrix::zero(2, 2)) == 3.0);
}
