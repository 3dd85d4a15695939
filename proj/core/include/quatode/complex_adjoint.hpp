#pragma once

/**
 * @file complex_adjoint.hpp
 * @brief The complex adjoint χ: ℍ^{m×n} → ℂ^{2m×2n} and what it buys us.
 *
 * Writing q = z1 + z2·j with z1 = w + x i and z2 = y + z i, each entry
 * becomes the 2×2 block
 *
 *     [  z1       z2     ]
 *     [ -conj(z2) conj(z1)]
 *
 * placed at rows 2r..2r+1, columns 2c..2c+1. χ is an injective ring
 * homomorphism, so matrix functions of A can be computed on χ(A) and
 * mapped back.
 */

#include <complex>

#include <Eigen/Dense>

#include "quatode/qmatrix.hpp"

namespace quatode {

using ComplexMatrix = Eigen::MatrixXcd;

ComplexMatrix complex_adjoint(const QMatrix& a);

/// Left inverse of complex_adjoint. Throws InputError when the input has odd
/// dimensions or violates the block structure by more than
/// tol·max(1, max|M_ij|).
QMatrix from_complex_adjoint(const ComplexMatrix& m, double tol = 1e-9);

/// Matrix exponential by scaling and squaring around a degree-13 Padé approximant.
ComplexMatrix expm(const ComplexMatrix& m);

/// exp(A·t), evaluated through the complex adjoint.
QMatrix expm(const QMatrix& a, double t);

/// Inverse through an LU factorisation of χ(A). Used where det_p's n! cost
/// is prohibitive. Throws SingularMatrixError when χ(A) is numerically singular.
QMatrix inverse_via_adjoint(const QMatrix& a);

/// det χ(A) (real for quaternion matrices).
double adjoint_determinant(const QMatrix& a);

}  // namespace quatode
