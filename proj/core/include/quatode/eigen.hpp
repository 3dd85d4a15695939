#pragma once

#include <vector>

#include "quatode/qmatrix.hpp"

namespace quatode {

/// A right eigenpair: A·vector = vector·value.
struct RightEigenpair {
  Quaternion value;  // complex representative, value.x >= 0, value.y = value.z = 0
  QVector vector;    // unit Euclidean norm
};

/**
 * n right eigenpairs of a constant square matrix, computed from the
 * eigen-decomposition of the complex adjoint χ(A).
 *
 * Right eigenvalues come in similarity classes; each class is reported by
 * its complex representative with nonnegative i-component, so diag(j, k)
 * yields {i, i}. The returned vectors are right-linearly independent over ℍ
 * and sorted by (Re λ, Im λ).
 *
 * Throws DefectiveMatrixError if χ(A) does not supply n independent
 * eigenvectors; callers should fall back to the matrix exponential.
 */
std::vector<RightEigenpair> right_eigenpairs(const QMatrix& a);

}  // namespace quatode
