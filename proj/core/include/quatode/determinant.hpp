#pragma once

/**
 * @file determinant.hpp
 * @brief Permutation determinant, double determinant and the inverse built on them.
 *
 * det_p sums over all of S_n. Each permutation is written in normal cycle
 * form (see permutation.hpp) and its term is the left-to-right product of
 * the cycles in decreasing-leader order, each cycle contributing the chain
 * a_{n1 i2} a_{i2 i3} ⋯ a_{is n1}, scaled by (-1)^(n - r). For commuting
 * entries this is the ordinary determinant.
 *
 * The double determinant ddet(A) = det_p(A⁺A) is real and nonnegative, and
 * A is invertible exactly when ddet(A) ≠ 0. The inverse is then given
 * entrywise by conj(B_{jk}) = w_{kj} / ddet(A).
 */

#include <cstddef>

#include "quatode/qmatrix.hpp"

namespace quatode {

/// det_p enumerates n! terms; larger matrices are rejected.
inline constexpr std::size_t kMaxDetPDimension = 8;

/// Throws ShapeError for non-square input or n > kMaxDetPDimension.
Quaternion det_p(const QMatrix& a);

/// det_p(A⁺A) as a real number. Throws NumericalError if the imaginary part
/// exceeds 1e-8·(1 + |result|).
double ddet(const QMatrix& a);

/// Threshold below which |ddet(A)| is treated as zero: 1e-10·(1 + ‖A‖_F^{2n}).
double singular_tolerance(const QMatrix& a);

/// Cofactor-like entry w_{kj} (zero-based k, j):
///   det_p[ R · C ]
/// where C is A with columns j and n-1 swapped, and R is C⁺ with its last
/// row replaced by e_k⁺. For j = n-1 the swap is the identity.
Quaternion w_entry(const QMatrix& a, std::size_t k, std::size_t j);

/// Inverse via the double determinant. Throws SingularMatrixError when
/// |ddet(A)| < singular_tolerance(A).
QMatrix inverse(const QMatrix& a);

}  // namespace quatode
