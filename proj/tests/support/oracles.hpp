#pragma once

// Test-only reference implementations. None of these call into the library's
// arithmetic so that they can serve as independent oracles.

#include <array>
#include <cstdint>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "quatode/qmatrix.hpp"
#include "quatode/quaternion.hpp"

namespace oracle {

using quatode::QMatrix;
using quatode::Quaternion;
using quatode::QVector;

/// Product from the basis multiplication table (1, i, j, k).
Quaternion table_mul(const Quaternion& a, const Quaternion& b);

/// 4×4 real matrix of left multiplication: a·b ↔ L(a)·[b].
Eigen::Matrix4d left_mul_matrix(const Quaternion& a);

/// Real 4n×4n representation of a quaternion matrix (block L(a_rc)).
Eigen::MatrixXd real_representation(const QMatrix& a);

/// Matrix product with table_mul entries.
QMatrix matmul(const QMatrix& a, const QMatrix& b);

/// Laplace expansion along the first row.
double cofactor_det(const Eigen::MatrixXd& m);

/// Truncated power series of e^q using table_mul.
Quaternion series_exp(const Quaternion& q, int terms = 40);

/// Seeded generators for property tests.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform(double lo, double hi);
  Quaternion quaternion(double scale = 1.0);
  QVector vector(std::size_t n, double scale = 1.0);
  QMatrix matrix(std::size_t rows, std::size_t cols, double scale = 1.0);
  QMatrix real_matrix(std::size_t n, double scale = 1.0);
  /// Random square matrix whose real representation has smallest singular
  /// value at least `min_sv`.
  QMatrix well_conditioned(std::size_t n, double min_sv = 0.2);

 private:
  std::mt19937_64 engine_;
};

double max_diff(const QMatrix& a, const QMatrix& b);
double max_diff(const QVector& a, const QVector& b);
double max_diff(const Quaternion& a, const Quaternion& b);

}  // namespace oracle
